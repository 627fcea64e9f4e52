#pragma once

#include <cstdint>
#include <vector>

#include "subsmooth/vec.hpp"

namespace subsmooth {

// Deterministic low-discrepancy unit directions. dim 1 gives {+1, -1};
// dim 2 equally spaced angles with a seed-dependent rotation; dim >= 3 a
// Kronecker sequence pushed through Box-Muller and normalized.
std::vector<Vec> unit_directions(int dim, int n, std::uint64_t seed);

}  // namespace subsmooth
