#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/sphere.hpp"
#include "subsmooth/subdifferentials.hpp"

using namespace subsmooth;
using catalogue::get;

namespace {
DirectionalSamplingConfig cfg() { return DirectionalSamplingConfig{}; }
SubdiffOracle oracle_of(const char* name) {
  return SubdiffOracle{get(name).exact_subdiff, OracleProvenance::exact_catalogue};
}

// Brute-force verification of the Moreau-Rockafellar inequality
// <s, y - x> + f(x) <= f(y) over grids of slopes and probe points.
std::pair<double, double> brute_force_mr_interval(const ScalarFn& f, double x) {
  double fx = f(Vec{x}).value();
  double lo = 1e300, hi = -1e300;
  for (int si = -300; si <= 300; ++si) {
    double s = si * 0.01;
    bool ok = true;
    for (int yi = -750; yi <= 750 && ok; ++yi) {
      double y = yi * 0.004;
      ExtReal fy = f(Vec{y});
      if (fy.is_pos_inf()) continue;
      if (s * (y - x) + fx > fy.value() + 1e-9) ok = false;
    }
    if (ok) {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  return {lo, hi};
}
}  // namespace

TEST_CASE("support function on the concrete forms") {
  SubgradientSet iv = SubgradientSet::interval(ExtReal(-1.0), ExtReal(1.0));
  CHECK(support(iv, Vec{1.0}) == ExtReal(1.0));
  CHECK(support(iv, Vec{-2.0}) == ExtReal(2.0));
  CHECK(support(iv, Vec{0.0}) == ExtReal(0.0));

  CHECK(support(SubgradientSet::empty(1), Vec{1.0}).is_neg_inf());

  SubgradientSet poly = SubgradientSet::polytope({Vec{1.0, 0.0}, Vec{0.0, 1.0}});
  CHECK(support(poly, Vec{1.0, 1.0}) == ExtReal(1.0));
  CHECK(support(poly, Vec{-1.0, 0.0}) == ExtReal(0.0));

  SubgradientSet unbounded = SubgradientSet::interval(ExtReal::neg_inf(), ExtReal(0.0));
  CHECK(support(unbounded, Vec{1.0}) == ExtReal(0.0));
  CHECK(support(unbounded, Vec{-1.0}).is_pos_inf());

  SubgradientSet ball = SubgradientSet::ball(Vec{1.0, 0.0}, 2.0);
  CHECK(support(ball, Vec{0.0, 1.0}) == ExtReal(2.0));

  CHECK_THROWS_AS(support(poly, Vec{1.0}), ContractError);
  CHECK_THROWS_AS(SubgradientSet::interval(ExtReal(1.0), ExtReal(0.0)), ContractError);
}

TEST_CASE("property: support functions are sublinear on sampled pairs") {
  const SubgradientSet sets[] = {
      SubgradientSet::interval(ExtReal(-1.0), ExtReal(2.0)),
      SubgradientSet::polytope({Vec{1.0, 0.0}, Vec{0.0, 1.0}, Vec{-1.0, -1.0}}),
      SubgradientSet::ball(Vec{0.5, -0.5}, 1.5),
  };
  for (const SubgradientSet& s : sets) {
    std::vector<Vec> dirs = unit_directions(s.dim(), 100, 42);
    for (size_t i = 0; i + 1 < dirs.size(); i += 2) {
      const Vec &u = dirs[i], &v = dirs[i + 1];
      ExtReal su = support(s, u), sv = support(s, v), suv = support(s, u + v);
      CHECK(leq_with_slack(suv, su + sv, 1e-10));
      CHECK(close(support(s, 2.5 * u), su * 2.5, 1e-10));
    }
  }
}

TEST_CASE("mr interval at the abs kink matches the brute-force oracle") {
  auto [lo_bf, hi_bf] = brute_force_mr_interval(get("abs").fn, 0.0);
  CHECK(lo_bf == doctest::Approx(-1.0).epsilon(0.011));
  CHECK(hi_bf == doctest::Approx(1.0).epsilon(0.011));

  SubgradientSet s = mr_subdiff_1d(get("abs").fn, 0.0, cfg().base);
  REQUIRE(s.is_interval());
  CHECK(s.as_interval().lo.value() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(s.as_interval().hi.value() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("mr interval at a differentiable point is a singleton") {
  SubgradientSet s = mr_subdiff_1d(get("abs").fn, 2.0, cfg().base);
  REQUIRE(s.is_interval());
  CHECK(s.as_interval().lo.value() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(s.as_interval().hi.value() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("mr interval at the domain boundary has an unbounded side") {
  auto [lo_bf, hi_bf] = brute_force_mr_interval(get("half_dom").fn, 0.0);
  CHECK(lo_bf <= -2.99);  // every slope <= 0 passes the brute-force check
  CHECK(hi_bf == doctest::Approx(0.0).epsilon(0.011));

  SubgradientSet s = mr_subdiff_1d(get("half_dom").fn, 0.0, cfg().base);
  REQUIRE(s.is_interval());
  CHECK(s.as_interval().lo.is_neg_inf());
  CHECK(std::abs(s.as_interval().hi.value()) <= 1e-6);
}

TEST_CASE("mr construction requires convex metadata") {
  CHECK_THROWS_AS(mr_subdiff_1d(get("neg_abs").fn, 0.0, cfg().base), ContractError);
}

TEST_CASE("clarke subdifferential intervals at the kinks") {
  for (const char* name : {"neg_abs", "abs"}) {
    CAPTURE(name);
    SubgradientSet s = clarke_subdiff(get(name).fn, Vec{0.0}, cfg());
    REQUIRE(s.is_interval());
    CHECK(s.as_interval().lo.value() == doctest::Approx(-1.0).epsilon(1e-4));
    CHECK(s.as_interval().hi.value() == doctest::Approx(1.0).epsilon(1e-4));
  }
  // closed form [-1, 1]; the endpoints are suprema of -cos(1/y) over the
  // sampled phases, so they sit a little inside
  SubgradientSet s = clarke_subdiff(get("osc").fn, Vec{0.0}, cfg());
  REQUIRE(s.is_interval());
  CHECK(s.as_interval().lo.value() == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(s.as_interval().hi.value() == doctest::Approx(1.0).epsilon(0.05));
  CHECK(s.as_interval().lo.value() >= -1.0 - 1e-6);
  CHECK(s.as_interval().hi.value() <= 1.0 + 1e-6);
}

TEST_CASE("sandwich: mr interval sits inside the clarke interval") {
  for (const char* name : {"abs", "relu", "half_dom", "square"}) {
    const CatalogueEntry& e = get(name);
    for (double x : {0.0, 0.5, 1.0}) {
      if (!e.fn(Vec{x}).is_finite()) continue;
      CAPTURE(name);
      CAPTURE(x);
      SubgradientSet mr = mr_subdiff_1d(e.fn, x, cfg().base);
      SubgradientSet cl = clarke_subdiff(e.fn, Vec{x}, cfg());
      REQUIRE(mr.is_interval());
      REQUIRE(cl.is_interval());
      CHECK(leq_with_slack(cl.as_interval().lo, mr.as_interval().lo, 1e-5));
      CHECK(leq_with_slack(mr.as_interval().hi, cl.as_interval().hi, 1e-5));
    }
  }
}

TEST_CASE("density scan: catalogue oracles exhibit the sequence") {
  for (const char* name : {"abs", "half_dom", "neg_abs"}) {
    CAPTURE(name);
    CHECK(density_scan(get(name).fn, oracle_of(name), Vec{0.0}, cfg()).holds());
  }
}

TEST_CASE("density scan fails when the oracle is empty near the point") {
  SubdiffOracle far_only;
  far_only.provenance = OracleProvenance::user_supplied;
  far_only.at = [](const Vec& x) {
    if (std::abs(x.x() - 5.0) < 1e-9) return SubgradientSet::interval(ExtReal(1.0), ExtReal(1.0));
    return SubgradientSet::empty(1);
  };
  Verdict v = density_scan(get("abs").fn, far_only, Vec{0.0}, cfg());
  CHECK(v.fails());
}

TEST_CASE("csv oracle: grouped rows become polytope vertices") {
  std::string path = "subsmooth_test_oracle.csv";
  {
    std::ofstream out(path);
    out << "x1,g1\n";
    out << "0.0,-1.0\n";
    out << "0.0,1.0\n";
    out << "0.5,1.0\n";
  }
  SubdiffOracle o = load_subdiff_csv(path);
  SubgradientSet at0 = o.at(Vec{0.0});
  REQUIRE(at0.is_polytope());
  CHECK(at0.as_polytope().vertices.size() == 2);
  CHECK(support(at0, Vec{1.0}) == ExtReal(1.0));
  CHECK(support(at0, Vec{-1.0}) == ExtReal(1.0));
  SubgradientSet at_half = o.at(Vec{0.5});
  CHECK(support(at_half, Vec{1.0}) == ExtReal(1.0));
  CHECK(o.at(Vec{0.25}).is_empty());
  std::remove(path.c_str());
}

TEST_CASE("csv oracle rejects malformed input") {
  std::string path = "subsmooth_bad_oracle.csv";
  {
    std::ofstream out(path);
    out << "x1,g1\n0.0\n";
  }
  CHECK_THROWS_AS(load_subdiff_csv(path), ParseError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_subdiff_csv("no_such_file.csv"), ParseError);
}
