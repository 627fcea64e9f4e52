#pragma once

#include <functional>
#include <string>

#include "subsmooth/scalar_fn.hpp"
#include "subsmooth/subderivatives.hpp"
#include "subsmooth/subgradient_set.hpp"
#include "subsmooth/verdict.hpp"

namespace subsmooth {

enum class OracleProvenance { exact_catalogue, numeric_mr, numeric_clarke, user_supplied };

// Point -> subgradient-set oracle. at(x) must be empty whenever f(x) = +inf.
struct SubdiffOracle {
  std::function<SubgradientSet(const Vec&)> at;
  OracleProvenance provenance = OracleProvenance::user_supplied;
};

// Moreau-Rockafellar subdifferential of a convex 1D function:
// [-f^r(x; -1), f^r(x; +1)], clipped to empty when the estimates cross.
SubgradientSet mr_subdiff_1d(const ScalarFn& f, double x, const GridConfig& cfg);

// Clarke subdifferential via the Clarke-Rockafellar support function; in
// dim 1 collapsed to the interval [-f^up(x; -1), f^up(x; +1)].
SubgradientSet clarke_subdiff(const ScalarFn& f, const Vec& x, const DirectionalSamplingConfig& cfg);

// Searches shells around x-bar for a sequence (x_n, x_n*) in the graph of
// the oracle with x_n -> x-bar, f(x_n) -> f(x-bar) and
// limsup <x_n*, x_n - x-bar> <= 0, choosing at each candidate the
// subgradient minimizing the pairing.
Verdict density_scan(const ScalarFn& f, const SubdiffOracle& oracle, const Vec& xbar,
                     const DirectionalSamplingConfig& cfg);

// CSV rows (x_1..x_n, g_1..g_n); rows sharing a point are the polytope
// vertices of the subdifferential there. An optional header row is skipped.
SubdiffOracle load_subdiff_csv(const std::string& path);

}  // namespace subsmooth
