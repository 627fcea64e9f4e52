#include <cmath>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/determination.hpp"
#include "subsmooth/meanvalue.hpp"
#include "subsmooth/semismooth.hpp"

namespace subsmooth {
namespace catalogue {

namespace {

DirectionalSamplingConfig dsc(const GridConfig& g) {
  DirectionalSamplingConfig c;
  c.base = g;
  return c;
}

RecoveryConfig rcfg(const GridConfig& g, RecoveryMode mode) {
  RecoveryConfig c;
  c.sampling = dsc(g);
  c.mode = mode;
  return c;
}

// Value facts degrade to inconclusive on precision misses; class facts
// (verdict flips, divergence signs, exact integers) degrade to fails.
Verdict value_fact(const ExtReal& est, const ExtReal& exact, double bound) {
  Verdict v;
  v.margin("estimate", est.as_double());
  v.margin("exact", exact.as_double());
  if (est.is_inf() || exact.is_inf()) {
    v.outcome = est.kind() == exact.kind() ? Outcome::holds : Outcome::fails;
    return v;
  }
  v.outcome = std::abs(est.value() - exact.value()) <= bound ? Outcome::holds
                                                             : Outcome::inconclusive;
  return v;
}

Verdict bool_fact(bool ok, const std::string& why_not = "") {
  Verdict v;
  v.outcome = ok ? Outcome::holds : Outcome::fails;
  if (!ok && !why_not.empty()) v.note(why_not);
  return v;
}

Fn01 fn01_of(const std::string& name, Fn01::Continuity c) {
  const CatalogueEntry& e = get(name);
  Fn01 out;
  out.continuity = c;
  ScalarFn fn = e.fn;
  out.eval = [fn](double t) { return fn(Vec{t}); };
  return out;
}

SubdiffOracle oracle_of(const std::string& name) {
  return SubdiffOracle{get(name).exact_subdiff, OracleProvenance::exact_catalogue};
}

ScalarFn abs_sq_shift(double shift) {
  return make_fn_1d([shift](double x) { return std::abs(x) + x * x + shift; },
                    FnMeta{true, true, 5.0});
}

SubdiffOracle abs_sq_oracle() {
  SubdiffOracle o;
  o.provenance = OracleProvenance::exact_catalogue;
  o.at = [](const Vec& x) {
    double v = x.x();
    if (v > 0.0) return SubgradientSet::interval(1.0 + 2.0 * v, 1.0 + 2.0 * v);
    if (v < 0.0) return SubgradientSet::interval(-1.0 + 2.0 * v, -1.0 + 2.0 * v);
    return SubgradientSet::interval(-1.0, 1.0);
  };
  return o;
}

}  // namespace

std::vector<PaperFact> paper_fixture_suite() {
  std::vector<PaperFact> facts;
  auto add = [&](std::string entry, std::string tag, std::string fact,
                 std::function<Verdict(const GridConfig&)> check) {
    facts.push_back({std::move(entry), std::move(tag), std::move(fact), std::move(check)});
  };

  // -- catalogue values ---------------------------------------------------
  add("step_gamma", "catalogue", "right-continuous step: value 1 at 0.25 and 0 at 0.75",
      [](const GridConfig&) {
        const CatalogueEntry& e = get("step_gamma");
        return bool_fact(e.fn(Vec{0.25}) == ExtReal(1.0) && e.fn(Vec{0.75}) == ExtReal(0.0));
      });
  add("jump_phi", "catalogue", "jump function gap phi(1) - phi(0) = 2 exactly",
      [](const GridConfig&) {
        const CatalogueEntry& e = get("jump_phi");
        return bool_fact(e.fn(Vec{1.0}) - e.fn(Vec{0.0}) == ExtReal(2.0));
      });
  add("neg_abs", "catalogue", "exact radial oracle gives -|u| at the kink",
      [](const GridConfig&) {
        const CatalogueEntry& e = get("neg_abs");
        return bool_fact(e.exact_radial(Vec{0.0}, Vec{1.0}) == ExtReal(-1.0) &&
                         e.exact_radial(Vec{0.0}, Vec{-2.0}) == ExtReal(-2.0));
      });

  // -- mean value counterexamples -----------------------------------------
  add("step_gamma", "meanvalue",
      "flat phi vs right-continuous step: conclusion gap 0 vs -1, usc breach at 1/2",
      [](const GridConfig& g) {
        Fn01 phi{[](double) { return ExtReal(0.0); }, Fn01::Continuity::continuous};
        Fn01 gamma = fn01_of("step_gamma", Fn01::Continuity::none);
        Verdict v = mvt_semicontinuous_check(phi, gamma, g);
        bool ok = v.fails() && v.margins.at("phi_gap") == 0.0 && v.margins.at("gamma_gap") == -1.0 &&
                  v.margins.count("gamma_usc_breach_t") &&
                  v.margins.at("gamma_usc_breach_t") == 0.5;
        Verdict out = bool_fact(ok, "checker must fail with exact gaps and usc attribution");
        out.margins = v.margins;
        return out;
      });
  add("jump_phi", "meanvalue",
      "jump phi vs sqrt gamma: conclusion gap 2 vs 1, infinite subderivative at 0",
      [](const GridConfig& g) {
        Fn01 phi = fn01_of("jump_phi", Fn01::Continuity::lsc);
        Fn01 gamma = fn01_of("sqrt_gamma", Fn01::Continuity::continuous);
        Verdict v = mvt_semicontinuous_check(phi, gamma, g);
        bool attributed = false;
        for (const std::string& n : v.notes)
          if (n.find("finiteness breach") != std::string::npos) attributed = true;
        bool ok = v.inconclusive() && v.margins.at("phi_gap") == 2.0 &&
                  v.margins.at("gamma_gap") == 1.0 && attributed;
        Verdict out = bool_fact(ok, "checker must report exact gaps and the finiteness breach");
        out.margins = v.margins;
        return out;
      });
  add("", "meanvalue", "mean value inequality witness on 100 seeded piecewise quadratics",
      [](const GridConfig& g) {
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
          Fn01 psi = random_piecewise_quadratic(seed);
          double lambda = psi.eval(1.0).value() - psi.eval(0.0).value();
          MviWitness w = mvi_witness(psi, lambda, g);
          if (w.slack_position < -g.tol) return bool_fact(false, "position slack violated");
          if (w.slack_derivative < ExtReal(-g.tol))
            return bool_fact(false, "derivative slack violated");
        }
        return bool_fact(true);
      });

  // -- radial subderivative values -----------------------------------------
  add("neg_abs", "subderivatives", "radial subderivative -2 at 0 toward -2",
      [](const GridConfig& g) {
        return value_fact(radial_lower(get("neg_abs").fn, Vec{0.0}, Vec{-2.0}, g).liminf_est,
                          ExtReal(-2.0), 100.0 * g.tol);
      });
  add("sqrt_abs", "subderivatives", "radial subderivative diverges to +inf at 0",
      [](const GridConfig& g) {
        return bool_fact(
            radial_lower(get("sqrt_abs").fn, Vec{0.0}, Vec{1.0}, g).divergent ==
                Divergence::to_pos_inf,
            "divergence flag missing");
      });
  add("neg_sqrt_abs", "subderivatives", "radial subderivative diverges to -inf at 0",
      [](const GridConfig& g) {
        return bool_fact(
            radial_lower(get("neg_sqrt_abs").fn, Vec{0.0}, Vec{1.0}, g).divergent ==
                Divergence::to_neg_inf,
            "divergence flag missing");
      });
  add("jump_phi", "subderivatives", "upper radial subderivative +inf at 0 toward +1",
      [](const GridConfig& g) {
        return bool_fact(radial_upper(get("jump_phi").fn, Vec{0.0}, Vec{1.0}, g).divergent ==
                             Divergence::to_pos_inf,
                         "divergence flag missing");
      });
  add("", "subderivatives", "lattice holds at the canonical kink points",
      [](const GridConfig& g) {
        for (const char* name : {"abs", "neg_abs", "osc", "relu"}) {
          Verdict v = lattice_check(get(name).fn, Vec{0.0}, Vec{1.0}, dsc(g));
          if (v.fails()) return bool_fact(false, std::string("lattice fails for ") + name);
        }
        return bool_fact(true);
      });

  // -- recovery and classification -----------------------------------------
  add("neg_abs", "semismooth", "directional recovery -1 vs full recovery +1 at the kink",
      [](const GridConfig& g) {
        SubdiffOracle o = oracle_of("neg_abs");
        ExtReal dir = recovered_radial(o, Vec{0.0}, Vec{1.0}, rcfg(g, RecoveryMode::directional));
        ExtReal full = recovered_radial(o, Vec{0.0}, Vec{1.0}, rcfg(g, RecoveryMode::full));
        Verdict a = value_fact(dir, ExtReal(-1.0), 1e-4);
        Verdict b = value_fact(full, ExtReal(1.0), 1e-4);
        Verdict out;
        out.outcome = a.holds() && b.holds()
                          ? Outcome::holds
                          : (a.fails() || b.fails() ? Outcome::fails : Outcome::inconclusive);
        out.margin("directional", dir.as_double());
        out.margin("full", full.as_double());
        return out;
      });
  add("neg_abs", "semismooth", "upper semismooth at 0 in u != 0 but not strictly",
      [](const GridConfig& g) {
        const ScalarFn& f = get("neg_abs").fn;
        SubdiffOracle o = oracle_of("neg_abs");
        for (double u : {1.0, -1.0, 2.0, -2.0}) {
          Verdict v = is_upper_semismooth(f, o, Vec{0.0}, Vec{u}, rcfg(g, RecoveryMode::directional));
          if (!v.holds()) return bool_fact(false, "upper semismoothness must hold");
        }
        Verdict s =
            is_strictly_upper_semismooth(f, o, Vec{0.0}, Vec{1.0}, rcfg(g, RecoveryMode::full));
        return bool_fact(s.fails(), "strict upper semismoothness must fail");
      });
  add("sqrt_abs", "semismooth", "upper semismooth at 0 with infinite radial subderivative",
      [](const GridConfig& g) {
        Verdict v = is_upper_semismooth(get("sqrt_abs").fn, oracle_of("sqrt_abs"), Vec{0.0},
                                        Vec{1.0}, rcfg(g, RecoveryMode::directional));
        return bool_fact(v.holds(), "must hold with f^r = +inf");
      });
  add("osc", "semismooth", "oscillating-derivative fixture is not upper semismooth at 0",
      [](const GridConfig& g) {
        Verdict v = is_upper_semismooth(get("osc").fn, oracle_of("osc"), Vec{0.0}, Vec{1.0},
                                        rcfg(g, RecoveryMode::directional));
        return bool_fact(v.fails(), "must fail");
      });
  add("abs", "semismooth", "convex fixture is strictly upper semismooth at the kink",
      [](const GridConfig& g) {
        Verdict v = is_strictly_upper_semismooth(get("abs").fn, oracle_of("abs"), Vec{0.0},
                                                 Vec{1.0}, rcfg(g, RecoveryMode::full));
        return bool_fact(v.holds(), "must hold");
      });
  add("", "semismooth", "convex identity: full-mode recovery equals the radial subderivative",
      [](const GridConfig& g) {
        struct Case {
          const char* name;
          Vec x, u;
        };
        const Case cases[] = {{"abs", Vec{0.0}, Vec{1.0}},
                              {"relu", Vec{0.0}, Vec{-1.0}},
                              {"half_dom", Vec{0.0}, Vec{1.0}},
                              {"max2d", Vec{0.0, 0.0}, Vec{1.0, 0.0}}};
        for (const Case& c : cases) {
          const CatalogueEntry& e = get(c.name);
          ExtReal rec = recovered_radial(e.fn, c.x, c.u, rcfg(g, RecoveryMode::full));
          ExtReal exact = e.exact_radial(c.x, c.u);
          Verdict v = value_fact(rec, exact, 1e-4);
          if (!v.holds()) return v;
        }
        return bool_fact(true);
      });
  add("", "semismooth", "radial stability along accessible rays",
      [](const GridConfig& g) {
        struct Case {
          const char* name;
          Vec x, u;
        };
        const Case cases[] = {{"abs", Vec{0.0}, Vec{1.0}},
                              {"neg_abs", Vec{0.0}, Vec{1.0}},
                              {"sqrt_abs", Vec{0.0}, Vec{1.0}},
                              {"half_dom", Vec{0.0}, Vec{1.0}}};
        for (const Case& c : cases) {
          Verdict v = radial_stability_check(get(c.name).fn, c.x, c.u, g);
          if (!v.holds()) return bool_fact(false, std::string("stability fails for ") + c.name);
        }
        return bool_fact(true);
      });

  // -- subdifferentials ------------------------------------------------------
  add("abs", "subdifferentials", "Moreau-Rockafellar interval [-1, 1] at the kink",
      [](const GridConfig& g) {
        SubgradientSet s = mr_subdiff_1d(get("abs").fn, 0.0, g);
        if (!s.is_interval()) return bool_fact(false, "expected an interval");
        Verdict lo = value_fact(s.as_interval().lo, ExtReal(-1.0), 100.0 * g.tol);
        Verdict hi = value_fact(s.as_interval().hi, ExtReal(1.0), 100.0 * g.tol);
        Verdict out;
        out.outcome = lo.holds() && hi.holds() ? Outcome::holds : Outcome::inconclusive;
        return out;
      });
  add("", "subdifferentials", "density scan succeeds for abs, half_dom, neg_abs",
      [](const GridConfig& g) {
        for (const char* name : {"abs", "half_dom", "neg_abs"}) {
          Verdict v = density_scan(get(name).fn, oracle_of(name), Vec{0.0}, dsc(g));
          if (!v.holds()) return bool_fact(false, std::string("density scan fails for ") + name);
        }
        return bool_fact(true);
      });

  // -- determination ----------------------------------------------------------
  add("", "determination", "pair (|x| + x^2 + 3, |x| + x^2): constant 3 certified",
      [](const GridConfig& g) {
        SegmentTask task;
        task.xbar = Vec{-1.0};
        task.ybar = Vec{1.0};
        task.f = abs_sq_shift(3.0);
        task.g = abs_sq_shift(0.0);
        task.f_oracle = abs_sq_oracle();
        task.g_oracle = abs_sq_oracle();
        task.mode = SegmentTask::Mode::continuous;
        std::vector<Vec> grid;
        for (int i = 0; i <= 20; ++i) grid.push_back(Vec{-1.0 + 0.1 * i});
        DeterminationReport rep = determination_experiment(task, grid, rcfg(g, RecoveryMode::directional));
        bool ok = rep.inclusion_holds.holds() && rep.hypothesis_51.holds() &&
                  std::abs(rep.const_estimate - 3.0) <= 1e-3 && rep.const_deviation <= 1e-3 &&
                  rep.theorem.holds();
        Verdict out = bool_fact(ok, "determination experiment must certify f = g + 3");
        out.margin("const_estimate", rep.const_estimate);
        out.margin("const_deviation", rep.const_deviation);
        return out;
      });
  add("", "determination", "pair (relu, abs): inclusion fails on the negative axis",
      [](const GridConfig& g) {
        Verdict v = inclusion_check(oracle_of("relu"), oracle_of("abs"), {Vec{-0.5}}, g);
        return bool_fact(v.fails(), "relu subdifferential is not inside abs's at x < 0");
      });

  return facts;
}

}  // namespace catalogue
}  // namespace subsmooth
