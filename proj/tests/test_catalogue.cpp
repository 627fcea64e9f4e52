#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/subderivatives.hpp"

using namespace subsmooth;
using catalogue::get;

TEST_CASE("registry carries the full contract name set") {
  for (const char* name :
       {"abs", "neg_abs", "sqrt_abs", "neg_sqrt_abs", "step_gamma", "jump_phi", "sqrt_gamma",
        "osc", "relu", "half_dom", "max2d", "neg_l1_2d", "square"}) {
    CAPTURE(name);
    CHECK(catalogue::has(name));
  }
  CHECK_THROWS_AS(get("no_such_fn"), LookupError);
}

TEST_CASE("exact radial oracles at the documented points") {
  CHECK(get("neg_abs").exact_radial(Vec{0.0}, Vec{1.0}) == ExtReal(-1.0));
  CHECK(get("sqrt_abs").exact_radial(Vec{0.0}, Vec{1.0}).is_pos_inf());
  CHECK(get("neg_sqrt_abs").exact_radial(Vec{0.0}, Vec{1.0}).is_neg_inf());
  CHECK(get("step_gamma").fn(Vec{0.25}) == ExtReal(1.0));
  CHECK(get("step_gamma").fn(Vec{0.75}) == ExtReal(0.0));
  CHECK(get("max2d").exact_radial(Vec{0.0, 0.0}, Vec{1.0, 1.0}) == ExtReal(1.0));
  CHECK(get("half_dom").exact_radial(Vec{0.0}, Vec{-1.0}).is_pos_inf());
}

TEST_CASE("labels match the contract") {
  CHECK(get("abs").labels.convex);
  CHECK(get("relu").labels.convex);
  CHECK(get("max2d").labels.convex);
  CHECK(get("neg_abs").labels.lipschitz);
  CHECK(get("osc").labels.lipschitz);
  CHECK(get("step_gamma").labels.usc_counterexample);
  CHECK_FALSE(get("step_gamma").labels.convex);
}

TEST_CASE("half_dom is proper lsc with a nonfull domain") {
  const ScalarFn& f = get("half_dom").fn;
  CHECK(f(Vec{1.0}) == ExtReal(0.0));
  CHECK(f(Vec{0.0}) == ExtReal(0.0));
  CHECK(f(Vec{-1e-9}).is_pos_inf());
  // lsc at the boundary: values just inside the domain approach f(0)
  CHECK(f(Vec{1e-12}) == ExtReal(0.0));
}

TEST_CASE("step_gamma breaches upper semicontinuity at 1/2, not lower") {
  const ScalarFn& g = get("step_gamma").fn;
  // liminf from the left is 1, the value from the right side is 0
  CHECK(g(Vec{0.5 - 1e-9}) == ExtReal(1.0));
  CHECK(g(Vec{0.5}) == ExtReal(0.0));
  CHECK(g(Vec{0.5 + 1e-9}) == ExtReal(0.0));
}

// Build-time cross-check: the numeric radial estimate agrees with the
// closed-form oracle (or its divergence verdict) on every check point.
TEST_CASE("numeric radial estimates match the exact oracles") {
  GridConfig cfg;
  for (const auto& name : catalogue::names()) {
    const CatalogueEntry& e = get(name);
    for (const auto& [x, u] : e.check_points) {
      CAPTURE(name);
      CAPTURE(x.str());
      CAPTURE(u.str());
      if (!e.fn(x).is_finite()) continue;
      ExtReal exact = e.exact_radial(x, u);
      TailEstimate est = radial_lower(e.fn, x, u, cfg);
      if (exact.is_inf()) {
        CHECK(est.liminf_est.kind() == exact.kind());
      } else {
        REQUIRE(est.liminf_est.is_finite());
        CHECK(std::abs(est.liminf_est.value() - exact.value()) <= 10.0 * cfg.tol);
      }
    }
  }
}

TEST_CASE("paper fixture suite includes the documented facts") {
  auto facts = catalogue::paper_fixture_suite();
  auto find = [&](const std::string& needle) {
    for (const auto& f : facts)
      if (f.fact.find(needle) != std::string::npos) return true;
    return false;
  };
  CHECK(find("phi(1) - phi(0) = 2"));
  CHECK(find("upper semismooth at 0 in u != 0 but not strictly"));
  CHECK(find("not upper semismooth at 0"));
  GridConfig cfg;
  for (const auto& f : facts) {
    CAPTURE(f.fact);
    CHECK_FALSE(f.check(cfg).fails());
  }
}

TEST_CASE("registry is safe for concurrent reads") {
  std::atomic<int> failures{0};
  auto worker = [&]() {
    GridConfig cfg;
    for (int i = 0; i < 50; ++i) {
      const CatalogueEntry& e = get("abs");
      if (radial_lower(e.fn, Vec{0.0}, Vec{1.0}, cfg).liminf_est != ExtReal(1.0)) ++failures;
    }
  };
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  CHECK(failures == 0);
}
