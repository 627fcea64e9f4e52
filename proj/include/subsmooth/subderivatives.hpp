#pragma once

#include "subsmooth/grid.hpp"
#include "subsmooth/scalar_fn.hpp"
#include "subsmooth/verdict.hpp"

namespace subsmooth {

// Sampling plan for the strict ("x -> x-bar in the graph") and
// direction-perturbed subderivatives.
struct DirectionalSamplingConfig {
  GridConfig base{};
  int n_dirs = 8;            // perturbed directions per shell
  double delta0 = 0.5;       // initial direction-perturbation radius
  double delta_rho = 0.6;    // geometric ratio of the perturbation radii
  double value_filter = 0.0; // extra slack admitted in |f(y) - f(x)|

  void validate() const;
};

// f^r(x; u): liminf of forward difference quotients along the ray.
// The estimate is the liminf_est field.
TailEstimate radial_lower(const ScalarFn& f, const Vec& x, const Vec& u, const GridConfig& cfg);

// f^r_+(x; u): the limsup counterpart (limsup_est field).
TailEstimate radial_upper(const ScalarFn& f, const Vec& x, const Vec& u, const GridConfig& cfg);

// f^0(x; u): limsup of quotients with the base point converging to x in
// the graph of f (limsup_est field).
TailEstimate clarke(const ScalarFn& f, const Vec& x, const Vec& u,
                    const DirectionalSamplingConfig& cfg);

// f^d(x; u): liminf with the direction perturbed as well (liminf_est field).
TailEstimate directional(const ScalarFn& f, const Vec& x, const Vec& u,
                         const DirectionalSamplingConfig& cfg);

// f^up(x; u): sup over delta of the limsup-inf construction admitting
// direction balls B_delta(u) (limsup_est field).
TailEstimate clarke_rockafellar(const ScalarFn& f, const Vec& x, const Vec& u,
                                const DirectionalSamplingConfig& cfg);

// Per-delta limsup estimates behind clarke_rockafellar (audit trail; the
// returned value of the op is their maximum).
std::vector<std::pair<double, ExtReal>> clarke_rockafellar_deltas(
    const ScalarFn& f, const Vec& x, const Vec& u, const DirectionalSamplingConfig& cfg);

// Checks f^d <= f^r <= f^r_+ <= f^0 and f^d <= f^up <= f^0 within 3*tol.
Verdict lattice_check(const ScalarFn& f, const Vec& x, const Vec& u,
                      const DirectionalSamplingConfig& cfg);

// Admission threshold for |f(y) - f(x)| at shell radius s: value_filter
// plus a Lipschitz slack (L*s with metadata, 10*sqrt(s) without).
double graph_admission_slack(const ScalarFn& f, const DirectionalSamplingConfig& cfg, double s);

}  // namespace subsmooth
