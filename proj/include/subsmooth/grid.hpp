#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subsmooth/ext_real.hpp"
#include "subsmooth/scalar_fn.hpp"

namespace subsmooth {

// Geometric step grid used by every "t -> 0+" scan.
struct GridConfig {
  double t0 = 0.1;             // initial step, > 0
  double rho = 0.6;            // ratio in (0, 1)
  int K = 50;                  // grid length
  int window = 10;             // tail window width
  double div_threshold = 1e8;  // divergence cutoff
  double tol = 1e-6;           // comparison tolerance
  std::uint64_t seed = 1;      // sampling reproducibility

  void validate() const;
};

enum class Divergence { none, to_pos_inf, to_neg_inf };

inline const char* to_string(Divergence d) {
  switch (d) {
    case Divergence::to_pos_inf: return "to_pos_inf";
    case Divergence::to_neg_inf: return "to_neg_inf";
    default: return "none";
  }
}

// Result of a limiting difference-quotient scan.
struct TailEstimate {
  std::vector<std::pair<double, ExtReal>> samples;  // (t, q), t strictly decreasing
  ExtReal liminf_est;
  ExtReal limsup_est;
  Divergence divergent = Divergence::none;
  bool stable = false;
};

// t0 * rho^k for k = 0..K-1, strictly decreasing.
std::vector<double> geometric_grid(const GridConfig& cfg);

// (f(x + t u) - f(x)) / t; +inf when x + t u leaves dom f.
ExtReal difference_quotient(const ScalarFn& f, const Vec& x, const Vec& u, double t);

// Windowed liminf/limsup surrogate over the last cfg.window samples, with
// divergence detection. Divergence is declared only on a monotone tail:
// either the window contains only infinities, or the last magnitude already
// exceeds div_threshold, or the per-step growth ratio stays >= 1.02 across
// the whole window (a sustained geometric trend whose extrapolation exceeds
// any threshold). On declared divergence both estimates are set to the
// matching infinity.
TailEstimate tail_bounds(const std::vector<std::pair<double, ExtReal>>& samples,
                         const GridConfig& cfg);

// Convenience: quotient samples along the ray x + t u, then tail_bounds.
// Steps below the floating-point reliability floor for the local function
// scale are dropped (see step_floor).
TailEstimate quotient_tail(const ScalarFn& f, const Vec& x, const Vec& u, const GridConfig& cfg);

// Smallest step at which a difference quotient of a function of the given
// value scale is numerically trustworthy.
double step_floor(double f_scale, double x_scale);

// Point estimate of the tail limit: on a monotone non-divergent window the
// limit is Richardson-extrapolated from the two deepest samples (sample
// sequences here converge linearly in t); otherwise the windowed extremum
// on the requested side.
ExtReal refined_tail_value(const TailEstimate& est, int window, bool upper);

}  // namespace subsmooth
