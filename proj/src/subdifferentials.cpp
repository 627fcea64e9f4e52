#include "subsmooth/subdifferentials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "subsmooth/errors.hpp"
#include "subsmooth/sphere.hpp"

namespace subsmooth {

SubgradientSet mr_subdiff_1d(const ScalarFn& f, double x, const GridConfig& cfg) {
  if (f.dim != 1) throw ContractError("mr_subdiff_1d: requires dim 1");
  if (!f.meta.convex)
    throw ContractError("mr_subdiff_1d: construction is only valid for convex metadata");
  Vec p{x};
  ExtReal fx = f(p);
  if (!fx.is_finite()) return SubgradientSet::empty(1);

  ExtReal hi = radial_lower(f, p, Vec{1.0}, cfg).liminf_est;
  ExtReal lo = -radial_lower(f, p, Vec{-1.0}, cfg).liminf_est;
  if (lo.is_finite() && hi.is_finite()) {
    if (lo.value() > hi.value() + cfg.tol) return SubgradientSet::empty(1);
    // Collapse sub-tolerance inversions from estimation noise.
    if (lo.value() > hi.value()) return SubgradientSet::interval(hi, hi);
  }
  return SubgradientSet::interval(lo, hi);
}

SubgradientSet clarke_subdiff(const ScalarFn& f, const Vec& x,
                              const DirectionalSamplingConfig& cfg) {
  ExtReal fx = f(x);
  if (!fx.is_finite()) return SubgradientSet::empty(x.dim());
  if (f.dim == 1) {
    ExtReal hi = clarke_rockafellar(f, x, Vec{1.0}, cfg).limsup_est;
    ExtReal lo = -clarke_rockafellar(f, x, Vec{-1.0}, cfg).limsup_est;
    if (lo > hi) return SubgradientSet::interval(hi, hi);
    return SubgradientSet::interval(lo, hi);
  }
  ScalarFn fcopy = f;
  Vec xcopy = x;
  DirectionalSamplingConfig ccopy = cfg;
  return SubgradientSet::support_oracle(
      [fcopy, xcopy, ccopy](const Vec& u) -> ExtReal {
        return clarke_rockafellar(fcopy, xcopy, u, ccopy).limsup_est;
      },
      x.dim());
}

Verdict density_scan(const ScalarFn& f, const SubdiffOracle& oracle, const Vec& xbar,
                     const DirectionalSamplingConfig& cfg) {
  cfg.validate();
  Verdict verdict;
  ExtReal fxbar = f(xbar);
  if (!fxbar.is_finite()) throw PreconditionError("density_scan: f(x-bar) must be finite");

  const std::vector<Vec> dirs = unit_directions(f.dim, cfg.n_dirs, cfg.base.seed);

  // Per shell, the best (smallest) pairing min over subgradients of
  // <g, x - xbar> among admissible candidates; inf over a set is
  // -support(S, -(x - xbar)).
  std::vector<double> shell_radii;
  std::vector<double> best_pairing;
  std::vector<double> best_fdev;
  for (double s : geometric_grid(cfg.base)) {
    if (s < 1e-6) break;
    double slack = graph_admission_slack(f, cfg, s);
    bool found = false;
    double pairing = 0.0, fdev = 0.0;
    std::vector<Vec> candidates = dirs;
    for (const Vec& w : candidates) {
      Vec xc = xbar + s * w;
      ExtReal fxc = f(xc);
      if (!fxc.is_finite() || std::abs(fxc.value() - fxbar.value()) > slack) continue;
      SubgradientSet S = oracle.at(xc);
      if (S.is_empty()) continue;
      ExtReal sup_neg = support(S, xbar - xc);
      if (sup_neg.is_neg_inf()) continue;  // defensive; empty already handled
      double p = sup_neg.is_pos_inf() ? -1e300 : -sup_neg.value();
      if (!found || p < pairing) {
        pairing = p;
        fdev = std::abs(fxc.value() - fxbar.value());
        found = true;
      }
    }
    if (found) {
      shell_radii.push_back(s);
      best_pairing.push_back(pairing);
      best_fdev.push_back(fdev);
    }
  }

  const size_t w = static_cast<size_t>(cfg.base.window);
  if (shell_radii.size() < w) {
    verdict.outcome = Outcome::fails;
    verdict.note("shells exhausted: oracle has no admissible points near x-bar");
    verdict.margin("admissible_shells", static_cast<double>(shell_radii.size()));
    return verdict;
  }

  // limsup <g, x_n - xbar> <= 0: accept pairings decaying at least
  // linearly with the shell radius (f(x_n) -> f(xbar) is already enforced
  // by the admission filter).
  bool pairing_ok = true;
  double worst_excess = 0.0;
  for (size_t i = shell_radii.size() - w; i < shell_radii.size(); ++i) {
    double allowance = cfg.base.tol + 10.0 * shell_radii[i];
    if (best_pairing[i] > allowance) {
      pairing_ok = false;
      worst_excess = std::max(worst_excess, best_pairing[i] - allowance);
    }
  }
  verdict.margin("deepest_pairing", best_pairing.back());
  verdict.margin("deepest_f_deviation", best_fdev.back());
  verdict.margin("worst_pairing_excess", worst_excess);
  if (pairing_ok) {
    verdict.outcome = Outcome::holds;
  } else {
    verdict.outcome = Outcome::fails;
    verdict.note("no subgradient sequence with limsup pairing <= 0 found");
  }
  return verdict;
}

namespace {

std::vector<double> parse_csv_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    size_t pos = 0;
    double v = std::stod(cell, &pos);
    out.push_back(v);
  }
  return out;
}

}  // namespace

SubdiffOracle load_subdiff_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_subdiff_csv: cannot open " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back(parse_csv_row(line));
    } catch (const std::exception&) {
      if (first) {
        first = false;  // header row
        continue;
      }
      throw ParseError("load_subdiff_csv: malformed row '" + line + "'");
    }
    first = false;
  }
  if (rows.empty()) throw ParseError("load_subdiff_csv: no data rows in " + path);
  size_t cols = rows.front().size();
  if (cols < 2 || cols % 2 != 0 || cols / 2 > static_cast<size_t>(kMaxDim))
    throw ParseError("load_subdiff_csv: rows must have 2n columns, n <= 5");
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("load_subdiff_csv: inconsistent column counts");

  const int dim = static_cast<int>(cols / 2);
  auto groups = std::make_shared<std::vector<std::pair<Vec, std::vector<Vec>>>>();
  for (const auto& r : rows) {
    Vec x(std::vector<double>(r.begin(), r.begin() + dim));
    Vec g(std::vector<double>(r.begin() + dim, r.end()));
    bool merged = false;
    for (auto& [key, verts] : *groups) {
      if ((key - x).norm() <= 1e-12) {
        verts.push_back(g);
        merged = true;
        break;
      }
    }
    if (!merged) groups->push_back({x, {g}});
  }

  SubdiffOracle oracle;
  oracle.provenance = OracleProvenance::user_supplied;
  oracle.at = [groups, dim](const Vec& x) -> SubgradientSet {
    for (const auto& [key, verts] : *groups)
      if ((key - x).norm() <= 1e-9) return SubgradientSet::polytope(verts);
    return SubgradientSet::empty(dim);
  };
  return oracle;
}

}  // namespace subsmooth
