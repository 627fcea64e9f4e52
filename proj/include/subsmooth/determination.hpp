#pragma once

#include <optional>
#include <vector>

#include "subsmooth/semismooth.hpp"

namespace subsmooth {

// One segment [xbar, ybar] of a subdifferential-determination experiment.
struct SegmentTask {
  Vec xbar;
  Vec ybar;
  ScalarFn f;
  ScalarFn g;
  SubdiffOracle f_oracle;
  SubdiffOracle g_oracle;
  std::vector<double> C;  // exceptional parameters in [0, 1]
  enum class Mode { continuous, semicontinuous } mode = Mode::continuous;
};

struct DeterminationReport {
  Verdict inclusion_holds;
  Verdict hypothesis_51;
  Verdict hypothesis_52;
  double const_estimate = 0.0;
  double const_deviation = 0.0;
  struct SegmentRecovery {
    Vec from;
    Vec to;
    std::optional<double> recovered_increment;
    std::optional<double> actual_g_increment;
    std::optional<double> actual_f_increment;
    std::string note;
  };
  std::vector<SegmentRecovery> per_segment;
  Verdict theorem;  // certified / violated / hypotheses-not-met
};

// Support-function domination of g's subdifferential over f's at each
// point (1D: interval-endpoint comparison; nD: 2n axis directions plus 32
// seeded sphere directions).
Verdict inclusion_check(const SubdiffOracle& f_oracle, const SubdiffOracle& g_oracle,
                        const std::vector<Vec>& points, const GridConfig& cfg);

// Continuity of both segment restrictions plus, off C, finiteness of one
// of the subderivatives and upper semismoothness of g.
Verdict hypothesis_check_51(const SegmentTask& task, const RecoveryConfig& cfg);

// Semicontinuous variant: off C, either (radial accessibility of f and
// upper semismoothness of g) or strict upper semismoothness of g.
Verdict hypothesis_check_52(const SegmentTask& task, const RecoveryConfig& cfg);

// Recovered radial subderivative r(t) of g along the segment, sampled at
// t = i/n (infinite or failed points reported as +inf placeholders via
// ExtReal; used for quadrature and CSV export).
std::vector<std::pair<double, ExtReal>> recover_profile(const SubdiffOracle& g_oracle,
                                                        const Vec& xbar, const Vec& ybar,
                                                        const RecoveryConfig& cfg, int n);

// Trapezoid quadrature of the recovered radial subderivative of g along
// [xbar, ybar]; estimates g(ybar) - g(xbar). Grid points with infinite or
// failed recovery are excluded (at most 5%).
double recover_increment(const SubdiffOracle& g_oracle, const Vec& xbar, const Vec& ybar,
                         const RecoveryConfig& cfg, int n_quad = 8192);

DeterminationReport determination_experiment(const SegmentTask& task, const std::vector<Vec>& grid,
                                             const RecoveryConfig& cfg);

}  // namespace subsmooth
