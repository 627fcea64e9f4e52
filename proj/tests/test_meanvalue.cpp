#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/meanvalue.hpp"

using namespace subsmooth;

namespace {
GridConfig cfg() { return GridConfig{}; }

Fn01 from_catalogue(const char* name, Fn01::Continuity c) {
  Fn01 out;
  out.continuity = c;
  ScalarFn fn = catalogue::get(name).fn;
  out.eval = [fn](double t) { return fn(Vec{t}); };
  return out;
}

Fn01 from_lambda(double (*f)(double), Fn01::Continuity c = Fn01::Continuity::continuous) {
  Fn01 out;
  out.continuity = c;
  out.eval = [f](double t) { return ExtReal(f(t)); };
  return out;
}
}  // namespace

TEST_CASE("mvi witness: affine case accepts any grid point") {
  Fn01 psi = from_lambda([](double t) { return t; });
  MviWitness w = mvi_witness(psi, 1.0, cfg());
  CHECK(w.t0 >= 0.0);
  CHECK(w.t0 < 1.0);
  CHECK(w.slack_position >= -cfg().tol);
  CHECK(w.slack_derivative >= ExtReal(-cfg().tol));
}

TEST_CASE("mvi witness: quadratic minimizer is located to grid accuracy") {
  Fn01 psi = from_lambda([](double t) { return t * t; });
  MviWitness w = mvi_witness(psi, 1.0, cfg());
  CHECK(std::abs(w.t0 - 0.5) <= 2e-3);  // analytic argmin of t^2 - t
  CHECK(w.slack_position >= -cfg().tol);
  CHECK(w.slack_derivative >= ExtReal(-cfg().tol));
}

TEST_CASE("mvi witness: jump function pins t0 = 0 with infinite dini slack") {
  Fn01 psi = from_catalogue("jump_phi", Fn01::Continuity::lsc);
  MviWitness w = mvi_witness(psi, 2.0, cfg());
  CHECK(w.t0 == 0.0);
  CHECK(w.slack_position >= -cfg().tol);
  CHECK(w.lower_dini_est.is_pos_inf());
  CHECK(w.slack_derivative.is_pos_inf());
}

TEST_CASE("mvi witness rejects lambda beyond psi(1) - psi(0)") {
  Fn01 psi = from_lambda([](double t) { return t; });
  CHECK_THROWS_AS(mvi_witness(psi, 1.5, cfg()), PreconditionError);
}

TEST_CASE("property: witnesses exist for 200 random piecewise quadratics") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Fn01 psi = random_piecewise_quadratic(seed);
    double lambda = psi.eval(1.0).value() - psi.eval(0.0).value();
    CAPTURE(seed);
    MviWitness w = mvi_witness(psi, lambda, cfg());
    CHECK(w.slack_position >= -cfg().tol);
    CHECK(w.slack_derivative >= ExtReal(-cfg().tol));
  }
}

TEST_CASE("mvt semicontinuous: affine pair holds") {
  Fn01 phi = from_lambda([](double t) { return t; });
  Fn01 gamma = from_lambda([](double t) { return 2.0 * t; });
  Verdict v = mvt_semicontinuous_check(phi, gamma, cfg());
  CHECK(v.holds());
  CHECK(v.margins.at("phi_gap") == 1.0);
  CHECK(v.margins.at("gamma_gap") == 2.0);
}

TEST_CASE("mvt semicontinuous: right-continuous step counterexample") {
  Fn01 phi = from_lambda([](double) { return 0.0; });
  Fn01 gamma = from_catalogue("step_gamma", Fn01::Continuity::none);
  Verdict v = mvt_semicontinuous_check(phi, gamma, cfg());
  CHECK(v.fails());  // hypothesis scan passes, conclusion is genuinely false
  CHECK(v.margins.at("phi_gap") == 0.0);
  CHECK(v.margins.at("gamma_gap") == -1.0);
  REQUIRE(v.margins.count("gamma_usc_breach_t") == 1);
  CHECK(v.margins.at("gamma_usc_breach_t") == 0.5);
}

TEST_CASE("mvt semicontinuous: jump pair breaches finiteness at 0") {
  Fn01 phi = from_catalogue("jump_phi", Fn01::Continuity::lsc);
  Fn01 gamma = from_catalogue("sqrt_gamma", Fn01::Continuity::continuous);
  Verdict v = mvt_semicontinuous_check(phi, gamma, cfg());
  CHECK(v.inconclusive());
  CHECK(v.margins.at("phi_gap") == 2.0);
  CHECK(v.margins.at("gamma_gap") == 1.0);
  bool attributed = false;
  for (const auto& n : v.notes)
    if (n.find("finiteness breach") != std::string::npos) attributed = true;
  CHECK(attributed);
}

TEST_CASE("mvt continuous: hypothesis genuinely fails for the tent map") {
  Fn01 phi = from_lambda([](double t) { return -std::abs(t - 0.5); });
  Fn01 gamma = from_lambda([](double) { return 0.0; });
  Verdict v = mvt_continuous_check(phi, gamma, {0.5}, cfg());
  CHECK(v.inconclusive());  // phi^r_+ = 1 > 0 away from C; no overclaim
}

TEST_CASE("mvt continuous: calculus pair holds") {
  Fn01 phi = from_lambda([](double t) { return t * (1.0 - t); });
  Fn01 gamma = from_lambda([](double t) { return t; });
  CHECK(mvt_continuous_check(phi, gamma, {}, cfg()).holds());
}

TEST_CASE("mvt continuous: identical functions hold with equality") {
  Fn01 phi = from_lambda([](double t) { return std::sin(t); });
  Verdict v = mvt_continuous_check(phi, phi, {}, cfg());
  CHECK(v.holds());
  CHECK(v.margins.at("phi_gap") == v.margins.at("gamma_gap"));
}

TEST_CASE("mvt continuous requires continuity metadata") {
  Fn01 phi = from_catalogue("jump_phi", Fn01::Continuity::lsc);
  Fn01 gamma = from_lambda([](double t) { return t; });
  CHECK_THROWS_AS(mvt_continuous_check(phi, gamma, {}, cfg()), PreconditionError);
}

TEST_CASE("dini tail near the right endpoint clamps its window") {
  Fn01 psi = from_lambda([](double t) { return t * t; });
  TailEstimate e = dini_tail(psi, 1.0 - 1e-5, cfg());
  REQUIRE(!e.samples.empty());
  CHECK(e.liminf_est.value() == doctest::Approx(2.0).epsilon(1e-3));
  CHECK_THROWS_AS(dini_tail(psi, 1.0, cfg()), PreconditionError);
}
