#include "subsmooth/catalogue.hpp"

#include <cmath>
#include <map>

#include "subsmooth/errors.hpp"

namespace subsmooth {
namespace catalogue {

namespace {

ExtReal fin(double v) { return ExtReal(v); }

// Radial subderivative of -|.| per coordinate: the building block shared
// by neg_abs and neg_l1_2d.
double neg_abs_radial_1(double x, double u) {
  if (x > 0.0) return -u;
  if (x < 0.0) return u;
  return -std::abs(u);
}

double osc_value(double x) { return x == 0.0 ? 0.0 : x * x * std::sin(1.0 / x); }
double osc_deriv(double x) { return 2.0 * x * std::sin(1.0 / x) - std::cos(1.0 / x); }

SubgradientSet iv(ExtReal lo, ExtReal hi) { return SubgradientSet::interval(lo, hi); }
SubgradientSet pt(double g) { return iv(ExtReal(g), ExtReal(g)); }

Vec v1(double x) { return Vec{x}; }

std::map<std::string, CatalogueEntry> build_registry() {
  std::map<std::string, CatalogueEntry> reg;

  auto add = [&](CatalogueEntry e) { reg.emplace(e.name, std::move(e)); };

  // ---- abs ----
  {
    CatalogueEntry e;
    e.name = "abs";
    e.fn = make_fn_1d([](double x) { return std::abs(x); },
                      FnMeta{true, true, 1.0});
    e.exact_radial = [](const Vec& x, const Vec& u) {
      if (x.x() > 0.0) return fin(u.x());
      if (x.x() < 0.0) return fin(-u.x());
      return fin(std::abs(u.x()));
    };
    e.exact_subdiff = [](const Vec& x) {
      if (x.x() > 0.0) return pt(1.0);
      if (x.x() < 0.0) return pt(-1.0);
      return iv(fin(-1.0), fin(1.0));
    };
    e.labels.convex = true;
    e.labels.lipschitz = true;
    e.labels.upper_semismooth_at = {{v1(0), v1(1)}, {v1(0), v1(-1)}};
    e.labels.strictly_upper_semismooth_at = {{v1(0), v1(1)}, {v1(0), v1(-1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(0), v1(-1)}, {v1(0), v1(2)},
                      {v1(0.3), v1(1)}, {v1(-0.7), v1(1)}};
    add(std::move(e));
  }

  // ---- neg_abs ----
  {
    CatalogueEntry e;
    e.name = "neg_abs";
    e.fn = make_fn_1d([](double x) { return -std::abs(x); }, FnMeta{false, true, 1.0});
    e.exact_radial = [](const Vec& x, const Vec& u) { return fin(neg_abs_radial_1(x.x(), u.x())); };
    e.exact_subdiff = [](const Vec& x) {
      if (x.x() > 0.0) return pt(-1.0);
      if (x.x() < 0.0) return pt(1.0);
      return iv(fin(-1.0), fin(1.0));
    };
    e.labels.lipschitz = true;
    e.labels.upper_semismooth_at = {{v1(0), v1(1)}, {v1(0), v1(-1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(0), v1(-2)}, {v1(0.5), v1(1)}, {v1(-0.5), v1(-1)}};
    add(std::move(e));
  }

  // ---- sqrt_abs ----
  {
    CatalogueEntry e;
    e.name = "sqrt_abs";
    e.fn = make_fn_1d([](double x) { return std::sqrt(std::abs(x)); });
    e.exact_radial = [](const Vec& x, const Vec& u) -> ExtReal {
      double xv = x.x(), uv = u.x();
      if (xv > 0.0) return fin(uv / (2.0 * std::sqrt(xv)));
      if (xv < 0.0) return fin(-uv / (2.0 * std::sqrt(-xv)));
      return uv == 0.0 ? fin(0.0) : ExtReal::pos_inf();
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      double xv = x.x();
      if (xv > 0.0) return pt(1.0 / (2.0 * std::sqrt(xv)));
      if (xv < 0.0) return pt(-1.0 / (2.0 * std::sqrt(-xv)));
      return iv(ExtReal::neg_inf(), ExtReal::pos_inf());
    };
    e.labels.upper_semismooth_at = {{v1(0), v1(1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(0), v1(-1)}, {v1(0.25), v1(1)}, {v1(-0.25), v1(1)}};
    add(std::move(e));
  }

  // ---- neg_sqrt_abs ----
  {
    CatalogueEntry e;
    e.name = "neg_sqrt_abs";
    e.fn = make_fn_1d([](double x) { return -std::sqrt(std::abs(x)); });
    e.exact_radial = [](const Vec& x, const Vec& u) -> ExtReal {
      double xv = x.x(), uv = u.x();
      if (xv > 0.0) return fin(-uv / (2.0 * std::sqrt(xv)));
      if (xv < 0.0) return fin(uv / (2.0 * std::sqrt(-xv)));
      return uv == 0.0 ? fin(0.0) : ExtReal::neg_inf();
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      double xv = x.x();
      if (xv > 0.0) return pt(-1.0 / (2.0 * std::sqrt(xv)));
      if (xv < 0.0) return pt(1.0 / (2.0 * std::sqrt(-xv)));
      return iv(ExtReal::neg_inf(), ExtReal::pos_inf());
    };
    e.labels.upper_semismooth_at = {{v1(0), v1(1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(0.25), v1(1)}};
    add(std::move(e));
  }

  // ---- step_gamma: 1 on (-inf, 1/2), 0 on [1/2, +inf); right-continuous
  // step, lsc everywhere but not usc at 1/2. ----
  {
    CatalogueEntry e;
    e.name = "step_gamma";
    e.fn = make_fn_1d([](double t) { return t < 0.5 ? 1.0 : 0.0; });
    e.exact_radial = [](const Vec& x, const Vec& u) -> ExtReal {
      if (x.x() == 0.5 && u.x() < 0.0) return ExtReal::pos_inf();
      return fin(0.0);
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      if (x.x() == 0.5) return iv(ExtReal::neg_inf(), fin(0.0));
      return pt(0.0);
    };
    e.labels.usc_counterexample = true;
    e.check_points = {{v1(0.25), v1(1)}, {v1(0.75), v1(1)}, {v1(0.5), v1(1)}, {v1(0.5), v1(-1)}};
    add(std::move(e));
  }

  // ---- jump_phi: 0 at t <= 0, 2 on (0, +inf); lsc with an upward jump. ----
  {
    CatalogueEntry e;
    e.name = "jump_phi";
    e.fn = make_fn_1d([](double t) { return t > 0.0 ? 2.0 : 0.0; });
    e.exact_radial = [](const Vec& x, const Vec& u) -> ExtReal {
      if (x.x() == 0.0 && u.x() > 0.0) return ExtReal::pos_inf();
      return fin(0.0);
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      if (x.x() == 0.0) return iv(fin(0.0), ExtReal::pos_inf());
      return pt(0.0);
    };
    e.check_points = {{v1(0), v1(1)}, {v1(0), v1(-1)}, {v1(0.5), v1(1)}, {v1(-0.3), v1(1)}};
    add(std::move(e));
  }

  // ---- sqrt_gamma: sqrt(t) on [0, +inf), +inf on (-inf, 0). ----
  {
    CatalogueEntry e;
    e.name = "sqrt_gamma";
    e.fn = make_fn([](const Vec& x) -> ExtReal {
      double t = x.x();
      return t >= 0.0 ? ExtReal(std::sqrt(t)) : ExtReal::pos_inf();
    }, 1);
    e.exact_radial = [](const Vec& x, const Vec& u) -> ExtReal {
      double t = x.x(), uv = u.x();
      if (t > 0.0) return fin(uv / (2.0 * std::sqrt(t)));
      if (t < 0.0) throw PreconditionError("sqrt_gamma: radial oracle outside dom f");
      return uv == 0.0 ? fin(0.0) : ExtReal::pos_inf();
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      double t = x.x();
      if (t > 0.0) return pt(1.0 / (2.0 * std::sqrt(t)));
      if (t < 0.0) return SubgradientSet::empty(1);
      return iv(ExtReal::neg_inf(), ExtReal::pos_inf());
    };
    e.check_points = {{v1(0), v1(1)}, {v1(0.25), v1(1)}, {v1(0), v1(-1)}};
    add(std::move(e));
  }

  // ---- osc: x^2 sin(1/x), 0 at 0. Lipschitz near 0 but the derivative
  // oscillates in [-1, 1]; the canonical non-semismooth fixture. ----
  {
    CatalogueEntry e;
    e.name = "osc";
    e.fn = make_fn_1d(&osc_value, FnMeta{false, true, 3.0});
    e.exact_radial = [](const Vec& x, const Vec& u) {
      if (x.x() == 0.0) return fin(0.0);
      return fin(u.x() * osc_deriv(x.x()));
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      if (x.x() == 0.0) return iv(fin(-1.0), fin(1.0));
      return pt(osc_deriv(x.x()));
    };
    e.labels.lipschitz = true;
    e.labels.not_upper_semismooth_at = {{v1(0), v1(1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(0), v1(-1)}, {v1(0.1), v1(1)}, {v1(-0.07), v1(1)}};
    add(std::move(e));
  }

  // ---- relu ----
  {
    CatalogueEntry e;
    e.name = "relu";
    e.fn = make_fn_1d([](double x) { return std::max(0.0, x); }, FnMeta{true, true, 1.0});
    e.exact_radial = [](const Vec& x, const Vec& u) {
      if (x.x() > 0.0) return fin(u.x());
      if (x.x() < 0.0) return fin(0.0);
      return fin(std::max(0.0, u.x()));
    };
    e.exact_subdiff = [](const Vec& x) {
      if (x.x() > 0.0) return pt(1.0);
      if (x.x() < 0.0) return pt(0.0);
      return iv(fin(0.0), fin(1.0));
    };
    e.labels.convex = true;
    e.labels.lipschitz = true;
    e.labels.upper_semismooth_at = {{v1(0), v1(1)}, {v1(0), v1(-1)}};
    e.labels.strictly_upper_semismooth_at = {{v1(0), v1(1)}, {v1(0), v1(-1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(0), v1(-1)}, {v1(1), v1(1)}, {v1(-1), v1(1)},
                      {v1(-1), v1(-1)}};
    add(std::move(e));
  }

  // ---- half_dom: indicator-style, 0 on [0, +inf), +inf on (-inf, 0). ----
  {
    CatalogueEntry e;
    e.name = "half_dom";
    e.fn = make_fn([](const Vec& x) -> ExtReal {
      return x.x() >= 0.0 ? ExtReal(0.0) : ExtReal::pos_inf();
    }, 1, FnMeta{true, false, std::nullopt});
    e.exact_radial = [](const Vec& x, const Vec& u) -> ExtReal {
      double xv = x.x();
      if (xv > 0.0) return fin(0.0);
      if (xv < 0.0) throw PreconditionError("half_dom: radial oracle outside dom f");
      return u.x() >= 0.0 ? fin(0.0) : ExtReal::pos_inf();
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      double xv = x.x();
      if (xv > 0.0) return pt(0.0);
      if (xv < 0.0) return SubgradientSet::empty(1);
      return iv(ExtReal::neg_inf(), fin(0.0));
    };
    e.labels.convex = true;
    e.labels.upper_semismooth_at = {{v1(0), v1(1)}};
    e.labels.strictly_upper_semismooth_at = {{v1(0), v1(1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(0), v1(-1)}, {v1(1), v1(1)}, {v1(1), v1(-1)},
                      {v1(2), v1(-1)}};
    add(std::move(e));
  }

  // ---- max2d ----
  {
    CatalogueEntry e;
    e.name = "max2d";
    e.fn = make_fn([](const Vec& x) { return ExtReal(std::max(x[0], x[1])); }, 2,
                   FnMeta{true, true, 1.0});
    e.exact_radial = [](const Vec& x, const Vec& u) {
      if (x[0] > x[1]) return fin(u[0]);
      if (x[0] < x[1]) return fin(u[1]);
      return fin(std::max(u[0], u[1]));
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      if (x[0] > x[1]) return SubgradientSet::singleton(Vec{1.0, 0.0});
      if (x[0] < x[1]) return SubgradientSet::singleton(Vec{0.0, 1.0});
      return SubgradientSet::polytope({Vec{1.0, 0.0}, Vec{0.0, 1.0}});
    };
    e.labels.convex = true;
    e.labels.lipschitz = true;
    e.labels.strictly_upper_semismooth_at = {{Vec{0.0, 0.0}, Vec{1.0, 0.0}}};
    e.labels.upper_semismooth_at = {{Vec{0.0, 0.0}, Vec{1.0, 0.0}}};
    e.check_points = {{Vec{0.0, 0.0}, Vec{1.0, 0.0}},
                      {Vec{0.0, 0.0}, Vec{0.0, 1.0}},
                      {Vec{0.0, 0.0}, Vec{1.0, 1.0}},
                      {Vec{1.0, 0.0}, Vec{1.0, 0.0}},
                      {Vec{0.0, 1.0}, Vec{1.0, 0.0}}};
    add(std::move(e));
  }

  // ---- neg_l1_2d: -(|x| + |y|). ----
  {
    CatalogueEntry e;
    e.name = "neg_l1_2d";
    e.fn = make_fn([](const Vec& x) { return ExtReal(-std::abs(x[0]) - std::abs(x[1])); }, 2,
                   FnMeta{false, true, std::sqrt(2.0)});
    e.exact_radial = [](const Vec& x, const Vec& u) {
      return fin(neg_abs_radial_1(x[0], u[0]) + neg_abs_radial_1(x[1], u[1]));
    };
    e.exact_subdiff = [](const Vec& x) -> SubgradientSet {
      auto comps = [](double c) -> std::vector<double> {
        if (c > 0.0) return {-1.0};
        if (c < 0.0) return {1.0};
        return {-1.0, 1.0};
      };
      std::vector<Vec> verts;
      for (double gx : comps(x[0]))
        for (double gy : comps(x[1])) verts.push_back(Vec{gx, gy});
      return SubgradientSet::polytope(std::move(verts));
    };
    e.labels.lipschitz = true;
    e.labels.upper_semismooth_at = {{Vec{0.0, 0.0}, Vec{1.0, 0.0}}};
    e.check_points = {{Vec{0.0, 0.0}, Vec{1.0, 0.0}},
                      {Vec{0.0, 0.0}, Vec{1.0, 1.0}},
                      {Vec{0.5, -0.5}, Vec{1.0, 0.0}},
                      {Vec{0.5, 0.0}, Vec{0.0, 1.0}}};
    add(std::move(e));
  }

  // ---- square: x^2 (reconstruction target with a singleton gradient). ----
  {
    CatalogueEntry e;
    e.name = "square";
    e.fn = make_fn_1d([](double x) { return x * x; }, FnMeta{true, true, 4.0});
    e.exact_radial = [](const Vec& x, const Vec& u) { return fin(2.0 * x.x() * u.x()); };
    e.exact_subdiff = [](const Vec& x) { return pt(2.0 * x.x()); };
    e.labels.convex = true;
    e.labels.lipschitz = true;
    e.labels.strictly_upper_semismooth_at = {{v1(0), v1(1)}};
    e.labels.upper_semismooth_at = {{v1(0), v1(1)}};
    e.check_points = {{v1(0), v1(1)}, {v1(1), v1(1)}, {v1(-1), v1(2)}, {v1(0.5), v1(-1)}};
    add(std::move(e));
  }

  return reg;
}

const std::map<std::string, CatalogueEntry>& registry() {
  static const std::map<std::string, CatalogueEntry> reg = build_registry();
  return reg;
}

}  // namespace

const CatalogueEntry& get(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw LookupError("catalogue: unknown entry '" + name + "'");
  return it->second;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

bool has(const std::string& name) { return registry().count(name) > 0; }

}  // namespace catalogue
}  // namespace subsmooth
