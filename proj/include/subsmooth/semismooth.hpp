#pragma once

#include <optional>
#include <vector>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/subdifferentials.hpp"

namespace subsmooth {

enum class RecoveryMode { directional, full };

// Sampling plan for the recovery formulas
//   f^r(xbar; u) = inf_{alpha >= 0} limsup f^X(x; u + alpha*(xbar - x))
// with x -> xbar directionally (mode directional) or outright (mode full,
// which includes the center point: plain convergence admits constant
// sequences).
struct RecoveryConfig {
  std::vector<double> alpha_grid = default_alpha_grid();
  DirectionalSamplingConfig sampling{};
  RecoveryMode mode = RecoveryMode::directional;

  static std::vector<double> default_alpha_grid();
  void validate() const;
};

struct RecoveryReport {
  ExtReal value;  // min over alpha of the per-alpha limsup estimates
  std::vector<std::pair<double, ExtReal>> per_alpha;
};

// Recovery through a subdifferential oracle (support-function values).
RecoveryReport recovered_radial_report(const SubdiffOracle& source, const Vec& xbar, const Vec& u,
                                       const RecoveryConfig& cfg);
// Recovery through radial-subderivative sampling of f itself.
RecoveryReport recovered_radial_report(const ScalarFn& source, const Vec& xbar, const Vec& u,
                                       const RecoveryConfig& cfg);

ExtReal recovered_radial(const SubdiffOracle& source, const Vec& xbar, const Vec& u,
                         const RecoveryConfig& cfg);
ExtReal recovered_radial(const ScalarFn& source, const Vec& xbar, const Vec& u,
                         const RecoveryConfig& cfg);

// Checks that the radial-sampling and support-sampling routes of the
// duality formula agree along x ->_v xbar for the given alpha.
Verdict duality_check(const ScalarFn& f, const SubdiffOracle& oracle, const Vec& xbar,
                      const Vec& u, const Vec& v, double alpha, const RecoveryConfig& cfg);

// f(xbar) = liminf_{t->0+} f(xbar + t u)?
Verdict is_radially_accessible(const ScalarFn& f, const Vec& xbar, const Vec& u,
                               const GridConfig& cfg);

// Along some mu_n -> 0+ with f(xbar + mu_n u) -> f(xbar):
// f^r_+(xbar; u) <= liminf_n f^r(xbar + mu_n u; u).
Verdict radial_stability_check(const ScalarFn& f, const Vec& xbar, const Vec& u,
                               const GridConfig& cfg);

Verdict is_upper_semismooth(const ScalarFn& f, const std::optional<SubdiffOracle>& oracle,
                            const Vec& xbar, const Vec& u, const RecoveryConfig& cfg);

Verdict is_strictly_upper_semismooth(const ScalarFn& f, const std::optional<SubdiffOracle>& oracle,
                                     const Vec& xbar, const Vec& u, const RecoveryConfig& cfg);

// Mifflin semismoothness: f^r(x; u) converges along x ->_u xbar to
// f^r(xbar; u), and the oracle's pairings <g, u> do too.
Verdict is_mifflin_semismooth(const ScalarFn& f, const SubdiffOracle& oracle, const Vec& xbar,
                              const Vec& u, const RecoveryConfig& cfg);

// eps-relaxed convexity inequality for pairs aligned with u near xbar.
Verdict is_dir_approx_convex(const ScalarFn& f, const Vec& xbar, const Vec& u, double eps,
                             const DirectionalSamplingConfig& cfg);

// Directionally Lipschitz: the strict limsup with perturbed directions
// stays finite.
Verdict is_dir_lipschitz(const ScalarFn& f, const Vec& xbar, const Vec& u,
                         const DirectionalSamplingConfig& cfg);

struct ClassVerdict {
  Verdict radially_accessible;
  Verdict upper_semismooth;
  Verdict strictly_upper_semismooth;
  Verdict mifflin_semismooth;
  Verdict dir_approx_convex;
  Verdict dir_lipschitz;
  ExtReal recovered_value_directional;
  ExtReal recovered_value_full;
  ExtReal direct_radial;
  bool estimator_inconsistency = false;
  std::vector<std::string> notes;
};

// Runs every detector on a catalogue entry and cross-checks the class
// implications (convex => strictly upper semismooth, approximate convexity
// => strictly, Lipschitz + Mifflin => upper semismooth, strict => non-strict).
ClassVerdict classify(const CatalogueEntry& entry, const Vec& xbar, const Vec& u,
                      const RecoveryConfig& cfg);

}  // namespace subsmooth
