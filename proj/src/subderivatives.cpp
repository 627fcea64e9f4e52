#include "subsmooth/subderivatives.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "subsmooth/errors.hpp"
#include "subsmooth/sphere.hpp"

namespace subsmooth {

namespace {

// Base-point shells for the strict ("y -> x in the graph") estimators stop
// here: radial behaviour at base points closer to a kink than this is not
// resolvable in double precision.
constexpr double kShellFloor = 1e-6;
// Smallest relative step depth t / shell_radius.
constexpr double kRelDepthFloor = 1e-7;

ExtReal checked_fx(const ScalarFn& f, const Vec& x, const char* who) {
  ExtReal fx = f(x);
  if (!fx.is_finite()) throw PreconditionError(std::string(who) + ": f(x) must be finite");
  return fx;
}

ExtReal quotient_from(const ScalarFn& f, const Vec& y, double fy, const Vec& dir, double t) {
  ExtReal v = f(y + t * dir);
  if (v.is_pos_inf()) return ExtReal::pos_inf();
  return ExtReal((v.value() - fy) / t);
}

std::vector<double> usable_steps(const std::vector<double>& ts, double floor) {
  std::vector<double> out;
  for (double t : ts) {
    if (t < floor) break;
    out.push_back(t);
  }
  return out;
}

// A tail estimate collapsed to one value plus its divergence flag.
struct Collapsed {
  ExtReal value;
  Divergence div = Divergence::none;
  bool stable = false;
};

Collapsed collapse_upper(const TailEstimate& e) { return {e.limsup_est, e.divergent, e.stable}; }
Collapsed collapse_lower(const TailEstimate& e) { return {e.liminf_est, e.divergent, e.stable}; }

Collapsed combine_max(const Collapsed& a, const Collapsed& b) {
  Collapsed out;
  out.value = max(a.value, b.value);
  out.div = a.value >= b.value ? a.div : b.div;
  if (a.div == Divergence::to_pos_inf || b.div == Divergence::to_pos_inf)
    out.div = Divergence::to_pos_inf;
  out.stable = a.stable && b.stable;
  return out;
}

Collapsed combine_min(const Collapsed& a, const Collapsed& b) {
  Collapsed out;
  out.value = min(a.value, b.value);
  out.div = a.value <= b.value ? a.div : b.div;
  if (a.div == Divergence::to_neg_inf || b.div == Divergence::to_neg_inf)
    out.div = Divergence::to_neg_inf;
  out.stable = a.stable && b.stable;
  return out;
}

TailEstimate as_tail(const Collapsed& c, std::vector<std::pair<double, ExtReal>> trace) {
  TailEstimate out;
  out.samples = std::move(trace);
  out.liminf_est = c.value;
  out.limsup_est = c.value;
  out.divergent = c.div;
  out.stable = c.stable;
  return out;
}

// Per-scale slice suprema for the strict estimators: level k draws base
// points on shell s_k (value-filtered), with relative steps t = s_k * tau
// down to the per-base floating-point floor, reduced by `cell` (the plain
// quotient for f^0, an inf over a direction ball for f^up). The slice
// sequence feeds tail_bounds, so divergence across scales stays visible.
template <typename CellValue>
std::optional<TailEstimate> shell_slices(const ScalarFn& f, const Vec& x, double fx,
                                         const DirectionalSamplingConfig& cfg, CellValue&& cell) {
  const std::vector<double> shells = usable_steps(geometric_grid(cfg.base), kShellFloor);
  const std::vector<Vec> dirs = unit_directions(f.dim, cfg.n_dirs, cfg.base.seed);

  std::vector<std::pair<double, ExtReal>> slices;
  for (double s : shells) {
    const double slack = graph_admission_slack(f, cfg, s);
    ExtReal sup = ExtReal::neg_inf();
    bool any = false;
    for (const Vec& w : dirs) {
      Vec y = x + s * w;
      ExtReal fy = f(y);
      if (!fy.is_finite() || std::abs(fy.value() - fx) > slack) continue;
      any = true;
      const double floor = step_floor(fy.value(), y.norm());
      for (double tau = 1.0; tau >= kRelDepthFloor; tau *= cfg.base.rho) {
        double t = s * tau;
        if (t < floor) break;
        sup = max(sup, cell(y, fy.value(), t));
      }
    }
    if (any) slices.emplace_back(s, sup);
  }
  if (slices.size() < static_cast<size_t>(std::min(cfg.base.window, 3))) return std::nullopt;
  GridConfig local = cfg.base;
  local.window = std::max(1, std::min(cfg.base.window, static_cast<int>(slices.size())));
  return tail_bounds(slices, local);
}

}  // namespace

void DirectionalSamplingConfig::validate() const {
  base.validate();
  if (n_dirs < 1) throw ConfigError("DirectionalSamplingConfig: n_dirs must be >= 1");
  if (!(delta0 > 0.0)) throw ConfigError("DirectionalSamplingConfig: delta0 must be > 0");
  if (!(delta_rho > 0.0 && delta_rho < 1.0))
    throw ConfigError("DirectionalSamplingConfig: delta_rho must be in (0, 1)");
  if (value_filter < 0.0) throw ConfigError("DirectionalSamplingConfig: value_filter must be >= 0");
}

double graph_admission_slack(const ScalarFn& f, const DirectionalSamplingConfig& cfg, double s) {
  if (f.meta.lipschitz_const) return cfg.value_filter + *f.meta.lipschitz_const * s;
  return cfg.value_filter + 10.0 * std::sqrt(s);
}

TailEstimate radial_lower(const ScalarFn& f, const Vec& x, const Vec& u, const GridConfig& cfg) {
  checked_fx(f, x, "radial_lower");
  return quotient_tail(f, x, u, cfg);
}

TailEstimate radial_upper(const ScalarFn& f, const Vec& x, const Vec& u, const GridConfig& cfg) {
  checked_fx(f, x, "radial_upper");
  return quotient_tail(f, x, u, cfg);
}

TailEstimate clarke(const ScalarFn& f, const Vec& x, const Vec& u,
                    const DirectionalSamplingConfig& cfg) {
  cfg.validate();
  const double fx = checked_fx(f, x, "clarke").value();
  auto cell = [&](const Vec& y, double fy, double t) { return quotient_from(f, y, fy, u, t); };
  std::optional<TailEstimate> slices = shell_slices(f, x, fx, cfg, cell);
  // The center base point (the constant sequence y = x) is exactly the
  // upper radial estimate; the supremum combines both sampling families.
  Collapsed center = collapse_upper(quotient_tail(f, x, u, cfg.base));
  Collapsed out = slices ? combine_max(collapse_upper(*slices), center) : center;
  return as_tail(out, slices ? slices->samples : std::vector<std::pair<double, ExtReal>>{});
}

TailEstimate directional(const ScalarFn& f, const Vec& x, const Vec& u,
                         const DirectionalSamplingConfig& cfg) {
  cfg.validate();
  const double fx = checked_fx(f, x, "directional").value();
  const std::vector<double> ts = usable_steps(geometric_grid(cfg.base), step_floor(fx, x.norm()));
  if (ts.size() < static_cast<size_t>(cfg.base.window))
    throw EstimationError("directional: function scale leaves too few usable steps");
  const std::vector<Vec> vs = unit_directions(f.dim, cfg.n_dirs, cfg.base.seed);

  // Level k: min over u' in B(u, delta_k) of the quotient at step t_k;
  // nested-box infima increase toward f^d, so the tail maximum is the
  // point estimate, floored by the plain radial estimate (u' = u).
  std::vector<std::pair<double, ExtReal>> slices;
  for (size_t k = 0; k < ts.size(); ++k) {
    const double delta = cfg.delta0 * std::pow(cfg.delta_rho, static_cast<double>(k));
    ExtReal worst = quotient_from(f, x, fx, u, ts[k]);
    for (const Vec& v : vs) worst = min(worst, quotient_from(f, x, fx, u + delta * v, ts[k]));
    slices.emplace_back(ts[k], worst);
  }
  TailEstimate box = tail_bounds(slices, cfg.base);
  Collapsed radial = collapse_lower(quotient_tail(f, x, u, cfg.base));
  Collapsed out = combine_min(collapse_upper(box), radial);
  return as_tail(out, std::move(slices));
}

namespace {

TailEstimate cr_at_delta(const ScalarFn& f, const Vec& x, double fx, const Vec& u,
                         const DirectionalSamplingConfig& cfg, double delta) {
  std::vector<Vec> ball{u};
  for (const Vec& v : unit_directions(f.dim, cfg.n_dirs, cfg.base.seed))
    ball.push_back(u + delta * v);
  auto cell = [&](const Vec& y, double fy, double t) {
    ExtReal worst = ExtReal::pos_inf();
    for (const Vec& d : ball) worst = min(worst, quotient_from(f, y, fy, d, t));
    return worst;
  };
  std::optional<TailEstimate> slices = shell_slices(f, x, fx, cfg, cell);

  // Center family: the ball infimum along the plain radial grid.
  std::vector<std::pair<double, ExtReal>> center_samples;
  for (double t : usable_steps(geometric_grid(cfg.base), step_floor(fx, x.norm())))
    center_samples.emplace_back(t, cell(x, fx, t));
  GridConfig local = cfg.base;
  local.window = std::max(1, std::min(cfg.base.window, static_cast<int>(center_samples.size())));
  Collapsed center = collapse_upper(tail_bounds(center_samples, local));

  Collapsed out = slices ? combine_max(collapse_upper(*slices), center) : center;
  return as_tail(out, slices ? slices->samples : std::move(center_samples));
}

std::vector<double> cr_delta_list(const DirectionalSamplingConfig& cfg) {
  std::vector<double> out;
  for (int d = 0; d <= 32; d += 4) out.push_back(cfg.delta0 * std::pow(cfg.delta_rho, d));
  return out;
}

}  // namespace

std::vector<std::pair<double, ExtReal>> clarke_rockafellar_deltas(
    const ScalarFn& f, const Vec& x, const Vec& u, const DirectionalSamplingConfig& cfg) {
  cfg.validate();
  const double fx = checked_fx(f, x, "clarke_rockafellar").value();
  std::vector<std::pair<double, ExtReal>> out;
  for (double delta : cr_delta_list(cfg))
    out.emplace_back(delta, cr_at_delta(f, x, fx, u, cfg, delta).limsup_est);
  return out;
}

TailEstimate clarke_rockafellar(const ScalarFn& f, const Vec& x, const Vec& u,
                                const DirectionalSamplingConfig& cfg) {
  cfg.validate();
  const double fx = checked_fx(f, x, "clarke_rockafellar").value();
  std::optional<TailEstimate> best;
  for (double delta : cr_delta_list(cfg)) {
    TailEstimate e = cr_at_delta(f, x, fx, u, cfg, delta);
    if (!best || e.limsup_est > best->limsup_est) best = std::move(e);
  }
  return *best;
}

Verdict lattice_check(const ScalarFn& f, const Vec& x, const Vec& u,
                      const DirectionalSamplingConfig& cfg) {
  Verdict verdict;
  try {
    TailEstimate radial = radial_lower(f, x, u, cfg.base);
    ExtReal r = radial.liminf_est;
    ExtReal rp = radial.limsup_est;
    ExtReal d = directional(f, x, u, cfg).liminf_est;
    ExtReal c0 = clarke(f, x, u, cfg).limsup_est;
    ExtReal up = clarke_rockafellar(f, x, u, cfg).limsup_est;

    const double slack = 3.0 * cfg.base.tol;
    struct Rel {
      const char* name;
      ExtReal lhs, rhs;
    };
    const Rel rels[] = {{"d<=r", d, r},
                        {"r<=r+", r, rp},
                        {"r+<=0", rp, c0},
                        {"d<=up", d, up},
                        {"up<=0", up, c0}};
    bool ok = true;
    for (const Rel& rel : rels) {
      bool pass = leq_with_slack(rel.lhs, rel.rhs, slack);
      if (rel.lhs.is_finite() && rel.rhs.is_finite())
        verdict.margin(std::string("margin:") + rel.name,
                       rel.rhs.value() + slack - rel.lhs.value());
      if (!pass) {
        ok = false;
        verdict.note(std::string("violated ") + rel.name + " (" + rel.lhs.str() + " vs " +
                     rel.rhs.str() + ")");
      }
    }
    verdict.margin("d", d.as_double());
    verdict.margin("r", r.as_double());
    verdict.margin("r+", rp.as_double());
    verdict.margin("clarke", c0.as_double());
    verdict.margin("cr", up.as_double());
    verdict.outcome = ok ? Outcome::holds : Outcome::fails;
  } catch (const EstimationError& err) {
    verdict.outcome = Outcome::inconclusive;
    verdict.note(std::string("estimation error: ") + err.what());
  }
  return verdict;
}

}  // namespace subsmooth
