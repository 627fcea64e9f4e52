#include "subsmooth/sphere.hpp"

#include <cmath>

#include "subsmooth/errors.hpp"

namespace subsmooth {

namespace {
constexpr double kPi = 3.14159265358979323846;

double frac(double x) { return x - std::floor(x); }

// Kronecker lattice coordinates from powers of the plastic-like constant
// of Roberts' R_d sequence.
double kronecker_gamma(int d) {
  double g = 1.0;
  for (int i = 0; i < 12; ++i) g = std::pow(1.0 + g, 1.0 / (d + 1));
  return g;
}
}  // namespace

std::vector<Vec> unit_directions(int dim, int n, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxDim) throw ContractError("unit_directions: dim must be in [1, 5]");
  if (n < 1) throw ContractError("unit_directions: n must be >= 1");

  std::vector<Vec> out;
  if (dim == 1) {
    out.push_back(Vec{1.0});
    out.push_back(Vec{-1.0});
    return out;
  }

  const double offset = frac(0.61803398874989484820 * static_cast<double>(seed % 100003));
  if (dim == 2) {
    for (int m = 0; m < n; ++m) {
      double th = 2.0 * kPi * (static_cast<double>(m) / n + offset);
      out.push_back(Vec{std::cos(th), std::sin(th)});
    }
    return out;
  }

  const double g = kronecker_gamma(dim);
  std::vector<double> alpha(static_cast<size_t>(dim + 1));
  for (int k = 0; k <= dim; ++k) alpha[static_cast<size_t>(k)] = frac(std::pow(1.0 / g, k + 1));
  for (int m = 0; m < n; ++m) {
    // Box-Muller on consecutive lattice coordinates, then normalize.
    std::vector<double> c(static_cast<size_t>(dim));
    for (int k = 0; k < dim; k += 2) {
      double u1 = frac(alpha[static_cast<size_t>(k)] * (m + 1) + offset);
      double u2 = frac(alpha[static_cast<size_t>(k + 1)] * (m + 1) + offset);
      u1 = std::max(u1, 1e-12);
      double r = std::sqrt(-2.0 * std::log(u1));
      c[static_cast<size_t>(k)] = r * std::cos(2.0 * kPi * u2);
      if (k + 1 < dim) c[static_cast<size_t>(k + 1)] = r * std::sin(2.0 * kPi * u2);
    }
    Vec v(c);
    if (v.norm() < 1e-9) v = Vec{std::vector<double>(static_cast<size_t>(dim), 1.0)};
    out.push_back(v.normalized());
  }
  return out;
}

}  // namespace subsmooth
