#include "subsmooth/grid.hpp"

#include <algorithm>
#include <cmath>

#include "subsmooth/errors.hpp"

namespace subsmooth {

namespace {
// Sustained per-step growth factor that counts as divergence on a
// geometric grid (detects |q| ~ t^-p down to p ~ 0.04 at rho = 0.6).
constexpr double kDivergenceGrowthRatio = 1.02;
}  // namespace

void GridConfig::validate() const {
  if (!(t0 > 0.0)) throw ConfigError("GridConfig: t0 must be > 0");
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("GridConfig: rho must be in (0, 1)");
  if (K <= 0) throw ConfigError("GridConfig: K must be >= 1");
  if (window <= 0 || window > K) throw ConfigError("GridConfig: window must be in [1, K]");
  if (!(div_threshold > 0.0)) throw ConfigError("GridConfig: div_threshold must be > 0");
  if (!(tol > 0.0)) throw ConfigError("GridConfig: tol must be > 0");
  if (t0 * std::pow(rho, K) < 1e-13)
    throw ConfigError("GridConfig: t0 * rho^K below the 1e-13 precision floor");
}

std::vector<double> geometric_grid(const GridConfig& cfg) {
  cfg.validate();
  std::vector<double> ts(static_cast<size_t>(cfg.K));
  double t = cfg.t0;
  for (int k = 0; k < cfg.K; ++k) {
    ts[static_cast<size_t>(k)] = t;
    t *= cfg.rho;
  }
  return ts;
}

ExtReal difference_quotient(const ScalarFn& f, const Vec& x, const Vec& u, double t) {
  if (!(t > 0.0)) throw PreconditionError("difference_quotient: t must be > 0");
  ExtReal fx = f(x);
  if (!fx.is_finite())
    throw PreconditionError("difference_quotient: f(x) must be finite (x in dom f)");
  ExtReal fxt = f(x + t * u);
  if (fxt.is_pos_inf()) return ExtReal::pos_inf();
  return ExtReal((fxt.value() - fx.value()) / t);
}

TailEstimate tail_bounds(const std::vector<std::pair<double, ExtReal>>& samples,
                         const GridConfig& cfg) {
  cfg.validate();
  const size_t w = static_cast<size_t>(cfg.window);
  if (samples.size() < w)
    throw EstimationError("tail_bounds: fewer samples than the tail window");

  TailEstimate est;
  est.samples = samples;

  const size_t begin = samples.size() - w;
  ExtReal lo = samples[begin].second;
  ExtReal hi = samples[begin].second;
  size_t n_pos_inf = 0, n_neg_inf = 0;
  bool nondecreasing = true, nonincreasing = true;
  for (size_t i = begin; i < samples.size(); ++i) {
    const ExtReal& q = samples[i].second;
    lo = min(lo, q);
    hi = max(hi, q);
    if (q.is_pos_inf()) ++n_pos_inf;
    if (q.is_neg_inf()) ++n_neg_inf;
    if (i > begin) {
      if (samples[i].second < samples[i - 1].second) nondecreasing = false;
      if (samples[i].second > samples[i - 1].second) nonincreasing = false;
    }
  }

  est.liminf_est = lo;
  est.limsup_est = hi;

  auto sustained_growth = [&](bool positive) {
    for (size_t i = begin + 1; i < samples.size(); ++i) {
      const ExtReal &prev = samples[i - 1].second, &cur = samples[i].second;
      if (!prev.is_finite() || !cur.is_finite()) return false;
      double a = positive ? prev.value() : -prev.value();
      double b = positive ? cur.value() : -cur.value();
      if (!(a > 0.0 && b >= a * kDivergenceGrowthRatio)) return false;
    }
    return true;
  };

  const ExtReal& last = samples.back().second;
  if (n_pos_inf == w) {
    est.divergent = Divergence::to_pos_inf;
  } else if (n_neg_inf == w) {
    est.divergent = Divergence::to_neg_inf;
  } else if (n_pos_inf == 0 && n_neg_inf == 0) {
    if (nondecreasing &&
        ((last.is_finite() && last.value() >= cfg.div_threshold) || sustained_growth(true))) {
      est.divergent = Divergence::to_pos_inf;
    } else if (nonincreasing && ((last.is_finite() && last.value() <= -cfg.div_threshold) ||
                                 sustained_growth(false))) {
      est.divergent = Divergence::to_neg_inf;
    }
  }

  if (est.divergent == Divergence::to_pos_inf) {
    est.liminf_est = ExtReal::pos_inf();
    est.limsup_est = ExtReal::pos_inf();
  } else if (est.divergent == Divergence::to_neg_inf) {
    est.liminf_est = ExtReal::neg_inf();
    est.limsup_est = ExtReal::neg_inf();
  }

  if (est.liminf_est.is_finite() && est.limsup_est.is_finite()) {
    est.stable = (est.limsup_est.value() - est.liminf_est.value()) <= cfg.tol;
  } else {
    est.stable = est.liminf_est == est.limsup_est;
  }
  return est;
}

double step_floor(double f_scale, double x_scale) {
  // Below this step, rounding noise eps*scale/t would exceed the 1e-8
  // noise budget; 1e-13 is the absolute precision floor of the grid.
  return std::max(1e-13, 2.2e-8 * (std::abs(f_scale) + x_scale));
}

ExtReal refined_tail_value(const TailEstimate& est, int window, bool upper) {
  if (est.divergent != Divergence::none) return upper ? est.limsup_est : est.liminf_est;
  const auto& s = est.samples;
  const size_t w = std::min(s.size(), static_cast<size_t>(std::max(window, 2)));
  if (w < 2) return upper ? est.limsup_est : est.liminf_est;
  bool inc = true, dec = true;
  for (size_t i = s.size() - w + 1; i < s.size(); ++i) {
    if (!s[i].second.is_finite() || !s[i - 1].second.is_finite())
      return upper ? est.limsup_est : est.liminf_est;
    if (s[i].second < s[i - 1].second) inc = false;
    if (s[i].second > s[i - 1].second) dec = false;
  }
  if (!inc && !dec) return upper ? est.limsup_est : est.liminf_est;
  const auto& [t1, v1] = s[s.size() - 2];
  const auto& [t0, v0] = s[s.size() - 1];  // deepest
  if (t1 <= t0) return upper ? est.limsup_est : est.liminf_est;
  double slope = (v1.value() - v0.value()) / (t1 - t0);
  return ExtReal(v0.value() - slope * t0);
}

TailEstimate quotient_tail(const ScalarFn& f, const Vec& x, const Vec& u, const GridConfig& cfg) {
  ExtReal fx = f(x);
  if (!fx.is_finite()) throw PreconditionError("quotient_tail: f(x) must be finite");
  const double floor = step_floor(fx.value(), x.norm());
  std::vector<std::pair<double, ExtReal>> samples;
  for (double t : geometric_grid(cfg)) {
    if (t < floor) break;
    samples.emplace_back(t, difference_quotient(f, x, u, t));
  }
  if (samples.size() < static_cast<size_t>(cfg.window))
    throw EstimationError("quotient_tail: function scale leaves too few usable steps");
  return tail_bounds(samples, cfg);
}

}  // namespace subsmooth
