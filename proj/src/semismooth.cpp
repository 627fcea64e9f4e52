#include "subsmooth/semismooth.hpp"

#include <algorithm>
#include <cmath>

#include "subsmooth/errors.hpp"
#include "subsmooth/sphere.hpp"

namespace subsmooth {

namespace {

constexpr double kShellFloor = 1e-6;  // outer sampling shells stop here

std::vector<double> shell_grid(const GridConfig& cfg) {
  std::vector<double> out;
  for (double t : geometric_grid(cfg)) {
    if (t < kShellFloor) break;
    out.push_back(t);
  }
  return out;
}

// Sample points x approaching xbar, grouped by shell level. Directional
// mode: x = xbar + t_k (u + w), ||w|| <= delta0 * t_k. Full mode: shells in
// every direction plus the center point itself.
struct ApproachSamples {
  std::vector<double> levels;            // shell scale per level
  std::vector<std::vector<Vec>> points;  // points per level
  bool include_center = false;
};

ApproachSamples approach_samples(int dim, const Vec& xbar, const Vec& u, RecoveryMode mode,
                                 const DirectionalSamplingConfig& cfg) {
  ApproachSamples s;
  s.levels = shell_grid(cfg.base);
  const std::vector<Vec> dirs = unit_directions(dim, cfg.n_dirs, cfg.base.seed);
  s.points.resize(s.levels.size());
  if (mode == RecoveryMode::directional) {
    if (u.is_zero()) throw PreconditionError("directional approach needs u != 0");
    for (size_t k = 0; k < s.levels.size(); ++k) {
      double t = s.levels[k];
      double delta = cfg.delta0 * t;
      s.points[k].push_back(xbar + t * u);
      for (const Vec& v : dirs) s.points[k].push_back(xbar + t * (u + delta * v));
    }
  } else {
    s.include_center = true;
    Vec ua = u.is_zero() ? u : u.normalized();
    for (size_t k = 0; k < s.levels.size(); ++k) {
      double t = s.levels[k];
      for (const Vec& v : dirs) s.points[k].push_back(xbar + t * v);
      if (!u.is_zero()) {
        s.points[k].push_back(xbar + t * ua);
        s.points[k].push_back(xbar - t * ua);
      }
    }
  }
  return s;
}

// Directional convergence toward xbar along v is the same approach pattern;
// v = 0 means plain convergence (full mode).
ApproachSamples approach_along(int dim, const Vec& xbar, const Vec& v,
                               const DirectionalSamplingConfig& cfg) {
  return approach_samples(dim, xbar, v, v.is_zero() ? RecoveryMode::full : RecoveryMode::directional,
                          cfg);
}

// limsup estimate over approach samples of a per-point extended-real value;
// absent values (empty oracle, point outside dom f) are skipped.
template <typename ValueAt>
std::optional<TailEstimate> approach_limsup(const ApproachSamples& s, const Vec& xbar,
                                            const GridConfig& base, ValueAt&& value_at) {
  std::vector<std::pair<double, ExtReal>> level_sup;
  for (size_t k = 0; k < s.levels.size(); ++k) {
    ExtReal sup = ExtReal::neg_inf();
    bool any = false;
    for (const Vec& x : s.points[k]) {
      std::optional<ExtReal> v = value_at(x);
      if (!v) continue;
      sup = max(sup, *v);
      any = true;
    }
    if (any) level_sup.emplace_back(s.levels[k], sup);
  }
  if (s.include_center) {
    std::optional<ExtReal> c = value_at(xbar);
    if (c) {
      for (auto& [t, v] : level_sup) v = max(v, *c);
      if (level_sup.empty()) level_sup.emplace_back(base.t0, *c);
    }
  }
  if (level_sup.size() < static_cast<size_t>(std::min(base.window, 3))) return std::nullopt;

  // Raw per-level suprema go straight to tail_bounds: the window maximum
  // estimates the limsup and monotone growth across levels stays visible
  // to the divergence detector.
  GridConfig local = base;
  local.window = std::max(1, std::min(base.window, static_cast<int>(level_sup.size())));
  return tail_bounds(level_sup, local);
}

template <typename ValueAtDir>
RecoveryReport recovery_impl(const Vec& xbar, const Vec& u, int dim, const RecoveryConfig& cfg,
                             ValueAtDir&& value_at_dir) {
  cfg.validate();
  ApproachSamples samples = approach_samples(dim, xbar, u, cfg.mode, cfg.sampling);

  RecoveryReport report;
  report.value = ExtReal::pos_inf();
  bool any_alpha = false;
  for (double alpha : cfg.alpha_grid) {
    auto value_at = [&](const Vec& x) -> std::optional<ExtReal> {
      Vec d = u + alpha * (xbar - x);
      return value_at_dir(x, d);
    };
    std::optional<TailEstimate> est =
        approach_limsup(samples, xbar, cfg.sampling.base, value_at);
    if (!est) continue;
    ExtReal refined = refined_tail_value(*est, cfg.sampling.base.window, /*upper=*/true);
    report.per_alpha.emplace_back(alpha, refined);
    report.value = any_alpha ? min(report.value, refined) : refined;
    any_alpha = true;
  }
  if (!any_alpha)
    throw EstimationError("recovered_radial: no admissible samples for any alpha");
  return report;
}

}  // namespace

std::vector<double> RecoveryConfig::default_alpha_grid() {
  std::vector<double> g{0.0, 0.5};
  for (double a = 1.0; a <= 1024.0; a *= 2.0) g.push_back(a);
  return g;
}

void RecoveryConfig::validate() const {
  sampling.validate();
  if (alpha_grid.empty() || alpha_grid.front() != 0.0)
    throw ConfigError("RecoveryConfig: alpha_grid must start at 0");
  if (!std::is_sorted(alpha_grid.begin(), alpha_grid.end()))
    throw ConfigError("RecoveryConfig: alpha_grid must be sorted ascending");
}

RecoveryReport recovered_radial_report(const SubdiffOracle& source, const Vec& xbar, const Vec& u,
                                       const RecoveryConfig& cfg) {
  return recovery_impl(xbar, u, xbar.dim(), cfg,
                       [&](const Vec& x, const Vec& d) -> std::optional<ExtReal> {
                         SubgradientSet S = source.at(x);
                         if (S.is_empty()) return std::nullopt;
                         return support(S, d);
                       });
}

RecoveryReport recovered_radial_report(const ScalarFn& source, const Vec& xbar, const Vec& u,
                                       const RecoveryConfig& cfg) {
  return recovery_impl(xbar, u, source.dim, cfg,
                       [&](const Vec& x, const Vec& d) -> std::optional<ExtReal> {
                         if (!source(x).is_finite()) return std::nullopt;
                         return radial_lower(source, x, d, cfg.sampling.base).liminf_est;
                       });
}

ExtReal recovered_radial(const SubdiffOracle& source, const Vec& xbar, const Vec& u,
                         const RecoveryConfig& cfg) {
  return recovered_radial_report(source, xbar, u, cfg).value;
}
ExtReal recovered_radial(const ScalarFn& source, const Vec& xbar, const Vec& u,
                         const RecoveryConfig& cfg) {
  return recovered_radial_report(source, xbar, u, cfg).value;
}

Verdict duality_check(const ScalarFn& f, const SubdiffOracle& oracle, const Vec& xbar,
                      const Vec& u, const Vec& v, double alpha, const RecoveryConfig& cfg) {
  cfg.validate();
  if (alpha < 0.0) throw PreconditionError("duality_check: alpha must be >= 0");
  if (!f(xbar).is_finite()) throw PreconditionError("duality_check: f(xbar) must be finite");

  ApproachSamples samples = approach_along(f.dim, xbar, v, cfg.sampling);
  Verdict verdict;
  auto radial_route = [&](const Vec& x) -> std::optional<ExtReal> {
    if (!f(x).is_finite()) return std::nullopt;
    return radial_lower(f, x, u + alpha * (xbar - x), cfg.sampling.base).liminf_est;
  };
  auto support_route = [&](const Vec& x) -> std::optional<ExtReal> {
    SubgradientSet S = oracle.at(x);
    if (S.is_empty()) return std::nullopt;
    return support(S, u + alpha * (xbar - x));
  };
  std::optional<TailEstimate> a = approach_limsup(samples, xbar, cfg.sampling.base, radial_route);
  std::optional<TailEstimate> b = approach_limsup(samples, xbar, cfg.sampling.base, support_route);
  if (!a || !b) {
    verdict.outcome = Outcome::inconclusive;
    verdict.note("too few admissible samples along the approach");
    return verdict;
  }
  ExtReal ra = refined_tail_value(*a, cfg.sampling.base.window, true);
  ExtReal rb = refined_tail_value(*b, cfg.sampling.base.window, true);
  verdict.margin("radial_route", ra.as_double());
  verdict.margin("support_route", rb.as_double());
  verdict.outcome =
      close(ra, rb, 3.0 * cfg.sampling.base.tol) ? Outcome::holds : Outcome::fails;
  return verdict;
}

Verdict is_radially_accessible(const ScalarFn& f, const Vec& xbar, const Vec& u,
                               const GridConfig& cfg) {
  cfg.validate();
  ExtReal fx = f(xbar);
  if (!fx.is_finite()) throw PreconditionError("is_radially_accessible: f(xbar) must be finite");

  std::vector<std::pair<double, ExtReal>> samples;
  for (double t : geometric_grid(cfg)) samples.emplace_back(t, f(xbar + t * u));
  TailEstimate tail = tail_bounds(samples, cfg);

  Verdict verdict;
  verdict.margin("f_at_xbar", fx.value());
  verdict.margin("ray_liminf", tail.liminf_est.as_double());
  if (close(tail.liminf_est, fx, cfg.tol)) {
    verdict.outcome = Outcome::holds;
    return verdict;
  }
  // The window may sit above f(xbar) purely by truncation; accept a
  // monotone gap decaying at a sustained geometric rate.
  const size_t w = static_cast<size_t>(cfg.window);
  bool decaying = true;
  double prev = -1.0;
  for (size_t i = samples.size() - w; i < samples.size(); ++i) {
    if (!samples[i].second.is_finite()) {
      decaying = false;
      break;
    }
    double gap = std::abs(samples[i].second.value() - fx.value());
    if (prev >= 0.0 && gap > 0.98 * prev) {
      decaying = false;
      break;
    }
    prev = gap;
  }
  verdict.outcome = decaying ? Outcome::holds : Outcome::fails;
  if (decaying) verdict.note("ray values converge to f(xbar) at a geometric rate");
  else verdict.note("liminf along the ray stays away from f(xbar)");
  return verdict;
}

Verdict radial_stability_check(const ScalarFn& f, const Vec& xbar, const Vec& u,
                               const GridConfig& cfg) {
  Verdict access = is_radially_accessible(f, xbar, u, cfg);
  if (!access.holds())
    throw PreconditionError("radial_stability_check: requires radial accessibility");
  double fx = f(xbar).value();

  std::vector<std::pair<double, ExtReal>> r_samples;
  for (double mu : geometric_grid(cfg)) {
    if (mu < kShellFloor) break;
    Vec x = xbar + mu * u;
    ExtReal v = f(x);
    if (!v.is_finite()) continue;
    double slack = f.meta.lipschitz_const ? *f.meta.lipschitz_const * mu : 10.0 * std::sqrt(mu);
    if (std::abs(v.value() - fx) > std::max(slack, cfg.tol)) continue;
    try {
      r_samples.emplace_back(mu, radial_lower(f, x, u, cfg).liminf_est);
    } catch (const EstimationError&) {
      continue;
    }
  }

  Verdict verdict;
  if (r_samples.size() < 3) {
    verdict.outcome = Outcome::inconclusive;
    verdict.note("no admissible subsequence with f(xbar + mu u) -> f(xbar)");
    return verdict;
  }
  GridConfig local = cfg;
  local.window = std::max(1, std::min(cfg.window, static_cast<int>(r_samples.size())));
  TailEstimate seq = tail_bounds(r_samples, local);
  ExtReal upper = radial_upper(f, xbar, u, cfg).limsup_est;

  verdict.margin("upper_radial_at_xbar", upper.as_double());
  verdict.margin("sequence_liminf", seq.liminf_est.as_double());
  verdict.outcome = leq_with_slack(upper, seq.liminf_est, 3.0 * cfg.tol) ? Outcome::holds
                                                                         : Outcome::fails;
  return verdict;
}

namespace {

Verdict semismooth_impl(const ScalarFn& f, const std::optional<SubdiffOracle>& oracle,
                        const Vec& xbar, const Vec& u, RecoveryConfig cfg, RecoveryMode mode) {
  cfg.mode = mode;
  Verdict verdict;
  if (u.is_zero()) throw PreconditionError("upper semismooth check: u must be nonzero");
  try {
    ExtReal fr = radial_lower(f, xbar, u, cfg.sampling.base).liminf_est;
    ExtReal rec = recovered_radial(f, xbar, u, cfg);
    verdict.margin("radial", fr.as_double());
    verdict.margin("recovered", rec.as_double());
    if (oracle) {
      ExtReal rec_o = recovered_radial(*oracle, xbar, u, cfg);
      verdict.margin("recovered_oracle", rec_o.as_double());
      if (!close(rec, rec_o, 3.0 * cfg.sampling.base.tol) &&
          !(leq_with_slack(rec_o, fr, 3.0 * cfg.sampling.base.tol) ==
            leq_with_slack(rec, fr, 3.0 * cfg.sampling.base.tol))) {
        verdict.outcome = Outcome::inconclusive;
        verdict.note("radial-sampling and oracle routes disagree");
        return verdict;
      }
    }
    verdict.outcome = leq_with_slack(rec, fr, 3.0 * cfg.sampling.base.tol) ? Outcome::holds
                                                                           : Outcome::fails;
  } catch (const EstimationError& e) {
    verdict.outcome = Outcome::inconclusive;
    verdict.note(e.what());
  }
  return verdict;
}

}  // namespace

Verdict is_upper_semismooth(const ScalarFn& f, const std::optional<SubdiffOracle>& oracle,
                            const Vec& xbar, const Vec& u, const RecoveryConfig& cfg) {
  return semismooth_impl(f, oracle, xbar, u, cfg, RecoveryMode::directional);
}

Verdict is_strictly_upper_semismooth(const ScalarFn& f, const std::optional<SubdiffOracle>& oracle,
                                     const Vec& xbar, const Vec& u, const RecoveryConfig& cfg) {
  return semismooth_impl(f, oracle, xbar, u, cfg, RecoveryMode::full);
}

Verdict is_mifflin_semismooth(const ScalarFn& f, const SubdiffOracle& oracle, const Vec& xbar,
                              const Vec& u, const RecoveryConfig& cfg) {
  if (!f.meta.locally_lipschitz && !f.meta.lipschitz_const)
    throw ContractError("is_mifflin_semismooth: requires Lipschitz metadata");
  cfg.validate();
  const GridConfig& base = cfg.sampling.base;
  ExtReal fr = radial_lower(f, xbar, u, base).liminf_est;

  ApproachSamples samples =
      approach_samples(f.dim, xbar, u, RecoveryMode::directional, cfg.sampling);
  std::vector<std::pair<double, ExtReal>> lo_r, hi_r, lo_dot, hi_dot;
  for (size_t k = 0; k < samples.levels.size(); ++k) {
    ExtReal rmin = ExtReal::pos_inf(), rmax = ExtReal::neg_inf();
    ExtReal dmin = ExtReal::pos_inf(), dmax = ExtReal::neg_inf();
    bool any_r = false, any_d = false;
    for (const Vec& x : samples.points[k]) {
      if (f(x).is_finite()) {
        ExtReal r = radial_lower(f, x, u, base).liminf_est;
        rmin = min(rmin, r);
        rmax = max(rmax, r);
        any_r = true;
      }
      SubgradientSet S = oracle.at(x);
      if (!S.is_empty()) {
        ExtReal top = support(S, u);
        ExtReal bot = -support(S, -1.0 * u);
        dmin = min(dmin, bot);
        dmax = max(dmax, top);
        any_d = true;
      }
    }
    if (any_r) {
      lo_r.emplace_back(samples.levels[k], rmin);
      hi_r.emplace_back(samples.levels[k], rmax);
    }
    if (any_d) {
      lo_dot.emplace_back(samples.levels[k], dmin);
      hi_dot.emplace_back(samples.levels[k], dmax);
    }
  }

  Verdict verdict;
  if (lo_r.size() < static_cast<size_t>(base.window) || lo_dot.size() < 3) {
    verdict.outcome = Outcome::inconclusive;
    verdict.note("too few admissible directional samples");
    return verdict;
  }
  GridConfig local = base;
  local.window = std::max(1, std::min(base.window, static_cast<int>(lo_dot.size())));
  ExtReal r_lo = refined_tail_value(tail_bounds(lo_r, base), base.window, false);
  ExtReal r_hi = refined_tail_value(tail_bounds(hi_r, base), base.window, true);
  ExtReal d_lo = refined_tail_value(tail_bounds(lo_dot, local), local.window, false);
  ExtReal d_hi = refined_tail_value(tail_bounds(hi_dot, local), local.window, true);

  const double tol = base.tol;
  bool r_converges = close(r_lo, r_hi, 2.0 * tol) && close(r_lo, fr, 3.0 * tol) &&
                     close(r_hi, fr, 3.0 * tol);
  bool dot_converges = close(d_lo, fr, 3.0 * tol) && close(d_hi, fr, 3.0 * tol);
  verdict.margin("radial_at_xbar", fr.as_double());
  verdict.margin("tail_r_lo", r_lo.as_double());
  verdict.margin("tail_r_hi", r_hi.as_double());
  verdict.margin("tail_pairing_lo", d_lo.as_double());
  verdict.margin("tail_pairing_hi", d_hi.as_double());
  verdict.outcome = (r_converges && dot_converges) ? Outcome::holds : Outcome::fails;
  if (!r_converges) verdict.note("f^r(x; u) does not converge to f^r(xbar; u) along x ->_u xbar");
  if (!dot_converges) verdict.note("subgradient pairings <g, u> do not converge to f^r(xbar; u)");
  return verdict;
}

Verdict is_dir_approx_convex(const ScalarFn& f, const Vec& xbar, const Vec& u, double eps,
                             const DirectionalSamplingConfig& cfg) {
  cfg.validate();
  if (!(eps > 0.0)) throw PreconditionError("is_dir_approx_convex: eps must be > 0");
  if (u.is_zero()) throw PreconditionError("is_dir_approx_convex: u must be nonzero");
  const Vec un = u.normalized();
  const std::vector<Vec> dirs = unit_directions(f.dim, cfg.n_dirs, cfg.base.seed);
  const double tol = cfg.base.tol;

  Verdict verdict;
  int delta_pass = -1;
  for (int dlevel = 0; dlevel <= 6; ++dlevel) {
    const double delta = cfg.delta0 * std::pow(cfg.delta_rho, dlevel);
    bool violated = false;
    double worst = 0.0;

    std::vector<double> radii{0.0};
    for (int p = 0; p < 10; ++p) radii.push_back(0.5 * delta * std::pow(cfg.delta_rho, p));
    std::vector<double> lengths;
    for (int q = 0; q < 12; ++q) lengths.push_back(0.5 * delta * std::pow(0.5, q));
    std::vector<Vec> seg_dirs{un};
    for (const Vec& v : dirs) {
      Vec cand = un + (0.45 * delta) * v;
      if (cand.norm() > 1e-9) seg_dirs.push_back(cand.normalized());
    }

    for (double a : radii) {
      for (const Vec& w : dirs) {
        Vec y = xbar + a * w;
        ExtReal fy = f(y);
        for (double s : lengths) {
          for (const Vec& dd : seg_dirs) {
            Vec x = y + s * dd;
            ExtReal fx = f(x);
            for (int ti = 1; ti <= 9 && !violated; ++ti) {
              double t = 0.1 * ti;
              Vec mid = y + (t * s) * dd;  // t*x + (1-t)*y
              ExtReal fmid = f(mid);
              // rhs = t f(x) + (1-t) f(y) + eps t (1-t) ||x-y||
              if (fx.is_pos_inf() || fy.is_pos_inf()) continue;
              double rhs = t * fx.value() + (1.0 - t) * fy.value() +
                           eps * t * (1.0 - t) * s;
              if (fmid.is_pos_inf()) {
                violated = true;
                worst = 1e300;
              } else if (fmid.value() > rhs + tol) {
                violated = true;
                worst = std::max(worst, fmid.value() - rhs);
              }
            }
            if (violated) break;
          }
          if (violated) break;
        }
        if (violated) break;
      }
      if (violated) break;
    }
    if (!violated) {
      delta_pass = dlevel;
      break;
    }
    verdict.margin("violation_at_delta_" + std::to_string(dlevel), worst);
  }
  if (delta_pass >= 0) {
    verdict.outcome = Outcome::holds;
    verdict.margin("delta_level", delta_pass);
  } else {
    verdict.outcome = Outcome::fails;
    verdict.note("every sampled delta exhibits a violating triple");
  }
  return verdict;
}

Verdict is_dir_lipschitz(const ScalarFn& f, const Vec& xbar, const Vec& u,
                         const DirectionalSamplingConfig& cfg) {
  cfg.validate();
  ExtReal fx = f(xbar);
  if (!fx.is_finite()) throw PreconditionError("is_dir_lipschitz: f(xbar) must be finite");

  const std::vector<double> shells = shell_grid(cfg.base);
  const std::vector<Vec> dirs = unit_directions(f.dim, cfg.n_dirs, cfg.base.seed);

  auto ball_at = [&](double delta) {
    std::vector<Vec> vs{u};
    for (const Vec& v : dirs) vs.push_back(u + delta * v);
    return vs;
  };

  // Center family: quotients from xbar along a shrinking direction ball
  // over the plain floored grid (keeps divergence visible to the ratio
  // detector).
  std::vector<std::pair<double, ExtReal>> center;
  {
    const double floor = step_floor(fx.value(), xbar.norm());
    size_t i = 0;
    for (double t : geometric_grid(cfg.base)) {
      if (t < floor) break;
      const double delta = cfg.delta0 * std::pow(cfg.delta_rho, static_cast<double>(i++));
      ExtReal sup = ExtReal::neg_inf();
      for (const Vec& v : ball_at(delta)) {
        ExtReal fz = f(xbar + t * v);
        sup = max(sup, fz.is_pos_inf() ? ExtReal::pos_inf()
                                       : ExtReal((fz.value() - fx.value()) / t));
      }
      center.emplace_back(t, sup);
    }
  }
  if (center.size() < 3) {
    Verdict sparse;
    sparse.outcome = Outcome::inconclusive;
    sparse.note("function scale leaves too few usable steps");
    return sparse;
  }
  GridConfig clocal = cfg.base;
  clocal.window = std::max(1, std::min(cfg.base.window, static_cast<int>(center.size())));
  TailEstimate center_tail = tail_bounds(center, clocal);

  // Shell family: per-scale suprema over (base, relative step, direction).
  std::vector<std::pair<double, ExtReal>> level_sup;
  for (size_t k = 0; k < shells.size(); ++k) {
    const double s = shells[k];
    const double slack = graph_admission_slack(f, cfg, s);
    const std::vector<Vec> vs = ball_at(cfg.delta0 * std::pow(cfg.delta_rho, static_cast<double>(k)));
    ExtReal sup = ExtReal::neg_inf();
    bool any = false;
    for (const Vec& w : dirs) {
      Vec y = xbar + s * w;
      ExtReal fy = f(y);
      if (!fy.is_finite() || std::abs(fy.value() - fx.value()) > slack) continue;
      any = true;
      double floor = step_floor(fy.value(), y.norm());
      for (double tau = 1.0; tau >= 1e-7; tau *= cfg.base.rho) {
        double t = s * tau;
        if (t < floor) break;
        for (const Vec& v : vs) {
          ExtReal fz = f(y + t * v);
          sup = max(sup, fz.is_pos_inf() ? ExtReal::pos_inf()
                                         : ExtReal((fz.value() - fy.value()) / t));
        }
      }
    }
    if (any) level_sup.emplace_back(s, sup);
  }

  ExtReal limsup = center_tail.limsup_est;
  Divergence div = center_tail.divergent;
  if (level_sup.size() >= 3) {
    GridConfig slocal = cfg.base;
    slocal.window = std::max(1, std::min(cfg.base.window, static_cast<int>(level_sup.size())));
    TailEstimate shell_tail = tail_bounds(level_sup, slocal);
    if (shell_tail.limsup_est > limsup) limsup = shell_tail.limsup_est;
    if (shell_tail.divergent == Divergence::to_pos_inf) div = Divergence::to_pos_inf;
  }

  Verdict verdict;
  verdict.margin("limsup", limsup.as_double());
  bool finite = div != Divergence::to_pos_inf && limsup.is_finite() &&
                limsup.value() < cfg.base.div_threshold;
  verdict.outcome = finite ? Outcome::holds : Outcome::fails;
  if (!finite) verdict.note("strict directional quotients diverge");
  return verdict;
}

ClassVerdict classify(const CatalogueEntry& entry, const Vec& xbar, const Vec& u,
                      const RecoveryConfig& cfg) {
  const ScalarFn& f = entry.fn;
  if (!f(xbar).is_finite()) throw PreconditionError("classify: f(xbar) must be finite");
  SubdiffOracle oracle{entry.exact_subdiff, OracleProvenance::exact_catalogue};

  ClassVerdict cv;
  cv.direct_radial = radial_lower(f, xbar, u, cfg.sampling.base).liminf_est;
  RecoveryConfig dir_cfg = cfg;
  dir_cfg.mode = RecoveryMode::directional;
  RecoveryConfig full_cfg = cfg;
  full_cfg.mode = RecoveryMode::full;
  cv.recovered_value_directional = recovered_radial(f, xbar, u, dir_cfg);
  cv.recovered_value_full = recovered_radial(f, xbar, u, full_cfg);

  cv.radially_accessible = is_radially_accessible(f, xbar, u, cfg.sampling.base);
  cv.upper_semismooth = is_upper_semismooth(f, oracle, xbar, u, cfg);
  cv.strictly_upper_semismooth = is_strictly_upper_semismooth(f, oracle, xbar, u, cfg);
  if (f.meta.locally_lipschitz || f.meta.lipschitz_const) {
    cv.mifflin_semismooth = is_mifflin_semismooth(f, oracle, xbar, u, cfg);
  } else {
    cv.mifflin_semismooth.outcome = Outcome::inconclusive;
    cv.mifflin_semismooth.note("requires Lipschitz metadata");
  }
  cv.dir_approx_convex = is_dir_approx_convex(f, xbar, u, 0.1, cfg.sampling);
  cv.dir_lipschitz = is_dir_lipschitz(f, xbar, u, cfg.sampling);

  auto flag = [&](const std::string& why) {
    cv.estimator_inconsistency = true;
    cv.notes.push_back("estimator inconsistency: " + why);
  };
  if (entry.labels.convex && cv.strictly_upper_semismooth.fails())
    flag("convex entry classified not strictly upper semismooth");
  if (cv.dir_approx_convex.holds() && cv.strictly_upper_semismooth.fails())
    flag("directionally approximately convex but not strictly upper semismooth");
  if (cv.dir_lipschitz.holds() && f.meta.convex && cv.strictly_upper_semismooth.fails())
    flag("directionally Lipschitz regular entry not strictly upper semismooth");
  if ((f.meta.locally_lipschitz || f.meta.lipschitz_const) && cv.mifflin_semismooth.holds() &&
      cv.upper_semismooth.fails())
    flag("Mifflin semismooth but not upper semismooth");
  if (cv.strictly_upper_semismooth.holds() && cv.upper_semismooth.fails())
    flag("strictly upper semismooth but not upper semismooth");
  return cv;
}

}  // namespace subsmooth
