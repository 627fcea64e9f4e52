#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subsmooth/grid.hpp"
#include "subsmooth/verdict.hpp"

namespace subsmooth {

// Function on [0, 1] with a declared continuity class.
struct Fn01 {
  std::function<ExtReal(double)> eval;
  enum class Continuity { lsc, continuous, none } continuity = Continuity::lsc;
};

// Witness for the mean value inequality: a point t0 in [0, 1) with
// psi(t0) <= psi(0) + t0*lambda and lambda <= psi^r(t0; +1).
struct MviWitness {
  double t0 = 0.0;
  ExtReal psi_t0;
  ExtReal lower_dini_est;
  double slack_position = 0.0;     // psi(0) + t0*lambda - psi(t0), >= -tol on success
  ExtReal slack_derivative;        // dini estimate - lambda, >= -tol (may be +inf)
};

// Follows the minimization argument: g(t) = psi(t) - t*lambda is scanned on
// a uniform grid of [0, 1] and refined twice around the incumbent
// (10^3 -> 10^3 -> 10^3 points over shrinking windows).
MviWitness mvi_witness(const Fn01& psi, double lambda, const GridConfig& cfg);

// Semicontinuous mean value theorem check: hypothesis scan
// phi^r(t;+1) <= gamma^r(t;+1) with a real rho(t) in between, conclusion
// phi(1)-phi(0) <= gamma(1)-gamma(0). Margins carry the exact gaps; notes
// attribute failures (semicontinuity breach / infinite subderivatives).
Verdict mvt_semicontinuous_check(const Fn01& phi, const Fn01& gamma, const GridConfig& cfg);

// Continuous version: phi^r_+ <= gamma^r off a countable exceptional set C
// (grid points within one scan step of C are skipped).
Verdict mvt_continuous_check(const Fn01& phi, const Fn01& gamma, const std::vector<double>& C,
                             const GridConfig& cfg);

// Lower/upper right Dini estimates of a [0,1] function at t0 (steps clipped
// to [floor, 1 - t0]).
TailEstimate dini_tail(const Fn01& fn, double t0, const GridConfig& cfg);

// Seeded random piecewise-quadratic lsc function on [0,1]; breakpoints lie
// on the 1e-3 scan lattice, downward value jumps are either 0 or >= 0.05.
Fn01 random_piecewise_quadratic(std::uint64_t seed);

}  // namespace subsmooth
