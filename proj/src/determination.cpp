#include "subsmooth/determination.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "subsmooth/errors.hpp"
#include "subsmooth/sphere.hpp"

namespace subsmooth {

namespace {

std::vector<Vec> inclusion_directions(int dim, std::uint64_t seed) {
  std::vector<Vec> dirs;
  if (dim == 1) {
    dirs.push_back(Vec{1.0});
    dirs.push_back(Vec{-1.0});
    return dirs;
  }
  for (int i = 0; i < dim; ++i) {
    Vec e(dim);
    e[i] = 1.0;
    dirs.push_back(e);
    e[i] = -1.0;
    dirs.push_back(e);
  }
  for (const Vec& v : unit_directions(dim, 32, seed)) dirs.push_back(v);
  return dirs;
}

constexpr int kHypothesisScanN = 40;  // t-grid for per-point hypothesis checks

bool near_exceptional(double t, const std::vector<double>& C) {
  for (double c : C)
    if (std::abs(t - c) <= 1.0 / kHypothesisScanN) return true;
  return false;
}

}  // namespace

Verdict inclusion_check(const SubdiffOracle& f_oracle, const SubdiffOracle& g_oracle,
                        const std::vector<Vec>& points, const GridConfig& cfg) {
  cfg.validate();
  if (points.empty()) throw PreconditionError("inclusion_check: points must be nonempty");

  Verdict verdict;
  int n_fail = 0, n_inconclusive = 0;
  double worst = 0.0;
  for (const Vec& x : points) {
    try {
      SubgradientSet Sf = f_oracle.at(x);
      SubgradientSet Sg = g_oracle.at(x);
      if (Sf.is_empty()) continue;  // empty set is included in anything
      bool ok = true;
      for (const Vec& d : inclusion_directions(x.dim(), cfg.seed)) {
        ExtReal a = support(Sf, d);
        ExtReal b = support(Sg, d);
        if (!leq_with_slack(a, b, cfg.tol)) {
          ok = false;
          if (a.is_finite() && b.is_finite()) worst = std::max(worst, a.value() - b.value());
          else worst = std::max(worst, 1e300);
        }
      }
      if (!ok) {
        ++n_fail;
        verdict.note("inclusion fails at " + x.str());
      }
    } catch (const std::exception& e) {
      ++n_inconclusive;
      verdict.note("oracle failure at " + x.str() + ": " + e.what());
    }
  }
  verdict.margin("points_checked", static_cast<double>(points.size()));
  verdict.margin("points_failed", static_cast<double>(n_fail));
  verdict.margin("worst_violation", worst);
  if (n_fail > 0) verdict.outcome = Outcome::fails;
  else if (n_inconclusive > 0) verdict.outcome = Outcome::inconclusive;
  else verdict.outcome = Outcome::holds;
  return verdict;
}

namespace {

// Continuity scan of t -> fn(xbar + t u) on [0, 1]: values finite and
// adjacent oscillation below a sqrt-modulus bound.
bool continuity_scan(const ScalarFn& fn, const Vec& xbar, const Vec& u, double tol,
                     std::string* why) {
  const int N = 200;
  double prev = 0.0;
  bool have_prev = false;
  const double bound = 4.0 * std::sqrt(u.norm() / N) + 100.0 * tol;
  for (int i = 0; i <= N; ++i) {
    double t = static_cast<double>(i) / N;
    ExtReal v = fn(xbar + t * u);
    if (!v.is_finite()) {
      *why = "restriction is infinite at t=" + std::to_string(t);
      return false;
    }
    if (have_prev && std::abs(v.value() - prev) > bound) {
      *why = "oscillation " + std::to_string(std::abs(v.value() - prev)) + " at t=" +
             std::to_string(t) + " exceeds the continuity modulus";
      return false;
    }
    prev = v.value();
    have_prev = true;
  }
  return true;
}

}  // namespace

Verdict hypothesis_check_51(const SegmentTask& task, const RecoveryConfig& cfg) {
  cfg.validate();
  Verdict verdict;
  const Vec u = task.ybar - task.xbar;
  const double tol = cfg.sampling.base.tol;

  std::string why;
  if (!continuity_scan(task.f, task.xbar, u, tol, &why)) {
    verdict.outcome = Outcome::fails;
    verdict.note("f restriction not continuous: " + why);
    return verdict;
  }
  if (!continuity_scan(task.g, task.xbar, u, tol, &why)) {
    verdict.outcome = Outcome::fails;
    verdict.note("g restriction not continuous: " + why);
    return verdict;
  }

  bool any_inconclusive = false;
  for (int i = 0; i < kHypothesisScanN; ++i) {
    double t = static_cast<double>(i) / kHypothesisScanN;
    if (near_exceptional(t, task.C)) continue;
    Vec xt = task.xbar + t * u;

    ExtReal fplus = radial_upper(task.f, xt, u, cfg.sampling.base).limsup_est;
    ExtReal gr = radial_lower(task.g, xt, u, cfg.sampling.base).liminf_est;
    if (!fplus.is_finite() && !gr.is_finite()) {
      verdict.outcome = Outcome::fails;
      verdict.note("neither f^r_+ nor g^r finite at t=" + std::to_string(t));
      verdict.margin("breach_t", t);
      return verdict;
    }
    Verdict uss = is_upper_semismooth(task.g, task.g_oracle, xt, u, cfg);
    if (uss.fails()) {
      verdict.outcome = Outcome::fails;
      verdict.note("g not upper semismooth at t=" + std::to_string(t));
      verdict.margin("breach_t", t);
      return verdict;
    }
    if (uss.inconclusive()) any_inconclusive = true;
  }
  verdict.outcome = any_inconclusive ? Outcome::inconclusive : Outcome::holds;
  return verdict;
}

Verdict hypothesis_check_52(const SegmentTask& task, const RecoveryConfig& cfg) {
  cfg.validate();
  Verdict verdict;
  const Vec u = task.ybar - task.xbar;

  bool any_inconclusive = false;
  for (int i = 0; i < kHypothesisScanN; ++i) {
    double t = static_cast<double>(i) / kHypothesisScanN;
    if (near_exceptional(t, task.C)) continue;
    Vec xt = task.xbar + t * u;
    if (!task.f(xt).is_finite() || !task.g(xt).is_finite()) continue;

    ExtReal fr = radial_lower(task.f, xt, u, cfg.sampling.base).liminf_est;
    ExtReal gr = radial_lower(task.g, xt, u, cfg.sampling.base).liminf_est;
    if (!fr.is_finite() && !gr.is_finite()) {
      verdict.outcome = Outcome::fails;
      verdict.note("neither f^r nor g^r finite at t=" + std::to_string(t));
      return verdict;
    }
    Verdict strict = is_strictly_upper_semismooth(task.g, task.g_oracle, xt, u, cfg);
    if (strict.holds()) continue;
    Verdict access = is_radially_accessible(task.f, xt, u, cfg.sampling.base);
    Verdict uss = is_upper_semismooth(task.g, task.g_oracle, xt, u, cfg);
    if (access.holds() && uss.holds()) continue;
    if (access.fails() || uss.fails() || strict.fails()) {
      verdict.outcome = Outcome::fails;
      verdict.note("neither variant of the hypothesis holds at t=" + std::to_string(t));
      verdict.margin("breach_t", t);
      return verdict;
    }
    any_inconclusive = true;
  }
  verdict.outcome = any_inconclusive ? Outcome::inconclusive : Outcome::holds;
  return verdict;
}

std::vector<std::pair<double, ExtReal>> recover_profile(const SubdiffOracle& g_oracle,
                                                        const Vec& xbar, const Vec& ybar,
                                                        const RecoveryConfig& cfg, int n) {
  cfg.validate();
  const Vec u = ybar - xbar;
  if (u.norm() == 0.0) throw PreconditionError("recover_profile: xbar != ybar required");
  RecoveryConfig rc = cfg;
  rc.mode = RecoveryMode::directional;
  std::vector<std::pair<double, ExtReal>> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    double t = static_cast<double>(i) / n;
    try {
      out.emplace_back(t, recovered_radial(g_oracle, xbar + t * u, u, rc));
    } catch (const EstimationError&) {
      out.emplace_back(t, ExtReal::pos_inf());
    }
  }
  return out;
}

double recover_increment(const SubdiffOracle& g_oracle, const Vec& xbar, const Vec& ybar,
                         const RecoveryConfig& cfg, int n_quad) {
  if (n_quad < 8) throw ConfigError("recover_increment: n_quad too small");

  std::vector<double> ts;
  std::vector<double> rs;
  int excluded = 0;
  for (const auto& [t, r] : recover_profile(g_oracle, xbar, ybar, cfg, n_quad)) {
    if (!r.is_finite()) {
      ++excluded;
      continue;
    }
    ts.push_back(t);
    rs.push_back(r.value());
  }
  if (excluded > (n_quad + 1) / 20)
    throw ReconstructionError("recover_increment: more than 5% of grid points failed");
  if (ts.size() < 2) throw ReconstructionError("recover_increment: too few valid grid points");

  double integral = 0.0;
  for (size_t i = 0; i + 1 < ts.size(); ++i)
    integral += (ts[i + 1] - ts[i]) * 0.5 * (rs[i] + rs[i + 1]);
  // Clamp missing end segments with nearest-value extension.
  if (ts.front() > 0.0) integral += ts.front() * rs.front();
  if (ts.back() < 1.0) integral += (1.0 - ts.back()) * rs.back();
  return integral;
}

DeterminationReport determination_experiment(const SegmentTask& task, const std::vector<Vec>& grid,
                                             const RecoveryConfig& cfg) {
  cfg.validate();
  DeterminationReport report;
  const GridConfig& base = cfg.sampling.base;

  report.inclusion_holds = inclusion_check(task.f_oracle, task.g_oracle, grid, base);
  if (task.mode == SegmentTask::Mode::continuous) {
    report.hypothesis_51 = hypothesis_check_51(task, cfg);
    report.hypothesis_52.outcome = Outcome::inconclusive;
    report.hypothesis_52.note("not evaluated in continuous mode");
  } else {
    report.hypothesis_52 = hypothesis_check_52(task, cfg);
    report.hypothesis_51.outcome = Outcome::inconclusive;
    report.hypothesis_51.note("not evaluated in semicontinuous mode");
  }

  // Constant estimate: median of f - g over grid points inside both domains.
  std::vector<double> diffs;
  double scale_f = 0.0;
  bool mismatch = false;
  for (const Vec& x : grid) {
    ExtReal fv = task.f(x), gv = task.g(x);
    if (fv.is_finite() && gv.is_finite()) {
      diffs.push_back(fv.value() - gv.value());
      scale_f = std::max(scale_f, std::abs(fv.value()));
    } else if (fv.is_finite() != gv.is_finite()) {
      mismatch = true;
    }
  }
  if (diffs.empty()) {
    report.theorem.outcome = Outcome::inconclusive;
    report.theorem.note("no grid points inside dom f and dom g");
    return report;
  }
  std::vector<double> sorted = diffs;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  report.const_estimate = sorted[sorted.size() / 2];
  report.const_deviation = 0.0;
  for (double d : diffs)
    report.const_deviation = std::max(report.const_deviation, std::abs(d - report.const_estimate));
  if (mismatch) report.const_deviation = std::numeric_limits<double>::infinity();

  DeterminationReport::SegmentRecovery seg;
  seg.from = task.xbar;
  seg.to = task.ybar;
  try {
    seg.recovered_increment = recover_increment(task.g_oracle, task.xbar, task.ybar, cfg);
  } catch (const std::exception& e) {
    seg.note = e.what();
  }
  ExtReal gx = task.g(task.xbar), gy = task.g(task.ybar);
  if (gx.is_finite() && gy.is_finite()) seg.actual_g_increment = gy.value() - gx.value();
  ExtReal fx = task.f(task.xbar), fy = task.f(task.ybar);
  if (fx.is_finite() && fy.is_finite()) seg.actual_f_increment = fy.value() - fx.value();
  report.per_segment.push_back(std::move(seg));

  const Verdict& hyp = task.mode == SegmentTask::Mode::continuous ? report.hypothesis_51
                                                                  : report.hypothesis_52;
  const double dev_bound = 5.0 * base.tol * (1.0 + scale_f);
  report.theorem.margin("const_estimate", report.const_estimate);
  report.theorem.margin("const_deviation", report.const_deviation);
  report.theorem.margin("deviation_bound", dev_bound);
  if (report.inclusion_holds.holds() && hyp.holds()) {
    if (report.const_deviation <= dev_bound) {
      report.theorem.outcome = Outcome::holds;
    } else {
      report.theorem.outcome = Outcome::fails;
      report.theorem.note("hypotheses and inclusion hold but f - g is not constant");
    }
  } else {
    report.theorem.outcome = Outcome::inconclusive;
    report.theorem.note("hypotheses or inclusion not established; deviation reported anyway");
  }
  return report;
}

}  // namespace subsmooth
