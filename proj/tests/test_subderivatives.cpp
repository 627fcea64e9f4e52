#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/subderivatives.hpp"

using namespace subsmooth;
using catalogue::get;

namespace {
DirectionalSamplingConfig cfg() { return DirectionalSamplingConfig{}; }
double approx_tol = 1e-5;
}  // namespace

TEST_CASE("radial lower: kink, divergence, scaled direction") {
  CHECK(radial_lower(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg().base).liminf_est == ExtReal(1.0));
  CHECK(radial_lower(get("sqrt_abs").fn, Vec{0.0}, Vec{1.0}, cfg().base).divergent ==
        Divergence::to_pos_inf);
  CHECK(radial_lower(get("neg_abs").fn, Vec{0.0}, Vec{-2.0}, cfg().base).liminf_est ==
        ExtReal(-2.0));
  CHECK_THROWS_AS(radial_lower(get("half_dom").fn, Vec{-1.0}, Vec{1.0}, cfg().base),
                  PreconditionError);
}

TEST_CASE("radial upper: kink, oscillation, jump") {
  CHECK(radial_upper(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg().base).limsup_est == ExtReal(1.0));
  ExtReal osc_up = radial_upper(get("osc").fn, Vec{0.0}, Vec{1.0}, cfg().base).limsup_est;
  REQUIRE(osc_up.is_finite());
  CHECK(std::abs(osc_up.value()) <= approx_tol);
  CHECK(radial_upper(get("jump_phi").fn, Vec{0.0}, Vec{1.0}, cfg().base).divergent ==
        Divergence::to_pos_inf);
}

TEST_CASE("clarke subderivative: the strict base-point limsup") {
  // closed form: f^0(0; 1) = 1 for -|x|
  CHECK(clarke(get("neg_abs").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est.value() ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(clarke(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est.value() ==
        doctest::Approx(1.0).epsilon(1e-9));
  // closed form: limsup of f'(y) = 1; phase sampling reaches it approximately
  ExtReal osc0 = clarke(get("osc").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est;
  REQUIRE(osc0.is_finite());
  CHECK(osc0.value() > 0.85);
  CHECK(osc0.value() < 1.0 + approx_tol);
}

TEST_CASE("directional subderivative: zero direction, 2d, 1d degeneracy") {
  CHECK(std::abs(directional(get("neg_abs").fn, Vec{0.0}, Vec{0.0}, cfg()).liminf_est.value()) <=
        approx_tol);
  CHECK(directional(get("max2d").fn, Vec{0.0, 0.0}, Vec{1.0, 0.0}, cfg()).liminf_est.value() ==
        doctest::Approx(1.0).epsilon(1e-6));
  ExtReal d = directional(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg()).liminf_est;
  ExtReal r = radial_lower(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg().base).liminf_est;
  CHECK(std::abs(d.value() - r.value()) <= cfg().base.tol);
}

TEST_CASE("clarke-rockafellar subderivative") {
  CHECK(clarke_rockafellar(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est.value() ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(clarke_rockafellar(get("half_dom").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est ==
        ExtReal(0.0));
  ExtReal up = clarke_rockafellar(get("neg_abs").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est;
  ExtReal c0 = clarke(get("neg_abs").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est;
  CHECK(std::abs(up.value() - c0.value()) <= 2.0 * cfg().base.tol);  // Lipschitz collapse
}

TEST_CASE("per-delta report is monotone toward the returned supremum") {
  auto per_delta = clarke_rockafellar_deltas(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg());
  REQUIRE(per_delta.size() >= 2);
  for (size_t i = 1; i < per_delta.size(); ++i) {
    CHECK(per_delta[i].first < per_delta[i - 1].first);
    CHECK(leq_with_slack(per_delta[i - 1].second, per_delta[i].second, 1e-9));
  }
  ExtReal sup = clarke_rockafellar(get("abs").fn, Vec{0.0}, Vec{1.0}, cfg()).limsup_est;
  CHECK(close(sup, per_delta.back().second, 1e-12));
}

TEST_CASE("lattice examples") {
  Verdict smooth = lattice_check(get("abs").fn, Vec{0.3}, Vec{1.0}, cfg());
  CHECK(smooth.holds());
  CHECK(smooth.margins.at("r") == doctest::Approx(1.0).epsilon(1e-6));

  Verdict kink = lattice_check(get("neg_abs").fn, Vec{0.0}, Vec{1.0}, cfg());
  CHECK(kink.holds());
  CHECK(kink.margins.at("d") == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(kink.margins.at("clarke") == doctest::Approx(1.0).epsilon(1e-6));

  Verdict osc = lattice_check(get("osc").fn, Vec{0.0}, Vec{1.0}, cfg());
  CHECK(osc.holds());
  CHECK(std::abs(osc.margins.at("r")) <= approx_tol);
  CHECK(osc.margins.at("clarke") > 0.85);
}

TEST_CASE("invariant: lattice never fails across the catalogue") {
  for (const auto& name : catalogue::names()) {
    const CatalogueEntry& e = get(name);
    for (const auto& [x, u] : e.check_points) {
      if (!e.fn(x).is_finite()) continue;
      CAPTURE(name);
      CAPTURE(x.str());
      CAPTURE(u.str());
      CHECK_FALSE(lattice_check(e.fn, x, u, cfg()).fails());
    }
  }
}

TEST_CASE("invariant: lipschitz collapse f^r = f^d and f^0 = f^up") {
  for (const auto& name : catalogue::names()) {
    const CatalogueEntry& e = get(name);
    if (!e.labels.lipschitz) continue;
    for (const auto& [x, u] : e.check_points) {
      if (u.is_zero()) continue;
      CAPTURE(name);
      CAPTURE(x.str());
      CAPTURE(u.str());
      ExtReal r = radial_lower(e.fn, x, u, cfg().base).liminf_est;
      ExtReal d = directional(e.fn, x, u, cfg()).liminf_est;
      CHECK(close(d, r, 2.0 * cfg().base.tol));
      ExtReal c0 = clarke(e.fn, x, u, cfg()).limsup_est;
      ExtReal up = clarke_rockafellar(e.fn, x, u, cfg()).limsup_est;
      CHECK(close(up, c0, 2.0 * cfg().base.tol));
    }
  }
}

TEST_CASE("invariant: positive homogeneity in the direction") {
  for (const char* name : {"abs", "neg_abs", "relu"}) {
    const CatalogueEntry& e = get(name);
    for (double lambda : {2.0, 10.0}) {
      for (double x : {0.0, 0.5}) {
        ExtReal base = radial_lower(e.fn, Vec{x}, Vec{1.0}, cfg().base).liminf_est;
        ExtReal scaled = radial_lower(e.fn, Vec{x}, Vec{lambda}, cfg().base).liminf_est;
        CAPTURE(name);
        CHECK(std::abs(scaled.value() - lambda * base.value()) <= lambda * cfg().base.tol);
      }
    }
  }
}

TEST_CASE("invariant: 1d directional degenerates to radial") {
  for (const auto& name : catalogue::names()) {
    const CatalogueEntry& e = get(name);
    if (e.fn.dim != 1) continue;
    for (const auto& [x, u] : e.check_points) {
      if (!e.fn(x).is_finite() || u.is_zero()) continue;
      CAPTURE(name);
      CAPTURE(x.str());
      CAPTURE(u.str());
      ExtReal d = directional(e.fn, x, u, cfg()).liminf_est;
      ExtReal r = radial_lower(e.fn, x, u, cfg().base).liminf_est;
      CHECK(close(d, r, cfg().base.tol));
    }
  }
}

TEST_CASE("estimates are deterministic given the seed") {
  DirectionalSamplingConfig a = cfg();
  ExtReal v1 = clarke(get("osc").fn, Vec{0.0}, Vec{1.0}, a).limsup_est;
  ExtReal v2 = clarke(get("osc").fn, Vec{0.0}, Vec{1.0}, a).limsup_est;
  CHECK(v1 == v2);
  a.base.seed = 999;  // a different seed may move the estimate slightly
  ExtReal v3 = clarke(get("osc").fn, Vec{0.0}, Vec{1.0}, a).limsup_est;
  CHECK(std::abs(v3.value() - v1.value()) < 0.2);
}
