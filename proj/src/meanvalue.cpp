#include "subsmooth/meanvalue.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "subsmooth/errors.hpp"

namespace subsmooth {

namespace {

constexpr int kScanN = 200;          // hypothesis-scan grid on [0, 1)
constexpr double kScBreach = 1e-3;   // semicontinuity breach threshold

ExtReal eval01(const Fn01& fn, double t) {
  ExtReal v = fn.eval(t);
  if (v.is_neg_inf()) throw ContractError("Fn01: oracle returned -inf");
  return v;
}

ExtReal g_aux(const Fn01& psi, double lambda, double t) {
  ExtReal v = eval01(psi, t);
  if (v.is_pos_inf()) return v;
  return ExtReal(v.value() - t * lambda);
}

}  // namespace

TailEstimate dini_tail(const Fn01& fn, double t0, const GridConfig& cfg) {
  ExtReal f0 = eval01(fn, t0);
  if (!f0.is_finite()) throw PreconditionError("dini_tail: fn(t0) must be finite");
  const double hi = 1.0 - t0;
  if (!(hi > 0.0)) throw PreconditionError("dini_tail: t0 must be < 1");
  const double floor = step_floor(f0.value(), 1.0);

  std::vector<std::pair<double, ExtReal>> samples;
  for (double h : geometric_grid(cfg)) {
    if (h > hi) continue;
    if (h < floor) break;
    ExtReal v = eval01(fn, t0 + h);
    samples.emplace_back(h, v.is_pos_inf() ? ExtReal::pos_inf()
                                           : ExtReal((v.value() - f0.value()) / h));
  }
  if (samples.empty()) {
    // t0 is within the precision floor of 1: fall back to the endpoint
    // quotient, which the minimization argument still controls.
    ExtReal v1 = eval01(fn, 1.0);
    ExtReal q = v1.is_pos_inf() ? ExtReal::pos_inf() : ExtReal((v1.value() - f0.value()) / hi);
    samples.emplace_back(hi, q);
  }
  GridConfig local = cfg;
  local.window = std::max(1, std::min(cfg.window, static_cast<int>(samples.size())));
  return tail_bounds(samples, local);
}

MviWitness mvi_witness(const Fn01& psi, double lambda, const GridConfig& cfg) {
  cfg.validate();
  ExtReal psi0 = eval01(psi, 0.0);
  if (!psi0.is_finite()) throw PreconditionError("mvi_witness: psi(0) must be finite");
  ExtReal psi1 = eval01(psi, 1.0);
  if (psi1.is_finite() && lambda > psi1.value() - psi0.value() + cfg.tol)
    throw PreconditionError("mvi_witness: lambda exceeds psi(1) - psi(0)");

  // Three-stage grid minimization of g(t) = psi(t) - t*lambda. The
  // incumbent survives each refinement (strict improvement only), so exact
  // lattice minimizers are not lost to grid-reconstruction rounding.
  double best_t = 0.0;
  ExtReal best_v = ExtReal::pos_inf();
  auto scan = [&](double lo, double hi, bool allow_one) {
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    const int n = 1000;
    for (int i = 0; i <= n; ++i) {
      double t = lo + (hi - lo) * static_cast<double>(i) / n;
      if (t >= 1.0 && !allow_one) continue;
      ExtReal v = g_aux(psi, lambda, t);
      if (v < best_v) {
        best_v = v;
        best_t = t;
      }
    }
  };

  scan(0.0, 1.0, true);
  if (best_t >= 1.0)
    throw EstimationError(
        "mvi_witness: discrete minimum only at t = 1; refine the grid or loosen tol");
  scan(best_t - 1e-3, best_t + 1e-3, false);
  scan(best_t - 2e-6, best_t + 2e-6, false);
  const double t0 = best_t;

  MviWitness w;
  w.t0 = t0;
  w.psi_t0 = eval01(psi, t0);
  w.slack_position = psi0.value() + t0 * lambda - w.psi_t0.value();
  TailEstimate dini = dini_tail(psi, t0, cfg);
  w.lower_dini_est = dini.liminf_est;
  w.slack_derivative = dini.liminf_est - ExtReal(lambda);
  return w;
}

namespace {

// Semicontinuity breach scan: compares fn(t) against the tail of
// one-sided neighbour extrema on a shrinking h-grid.
struct BreachScan {
  bool found = false;
  double at = 0.0;
  double gap = 0.0;
};

BreachScan semicontinuity_breach(const Fn01& fn, bool check_usc, const GridConfig& cfg) {
  BreachScan out;
  for (int i = 0; i <= kScanN; ++i) {
    double t = static_cast<double>(i) / kScanN;
    ExtReal vt = eval01(fn, t);
    if (!vt.is_finite()) continue;
    std::vector<std::pair<double, ExtReal>> neigh;
    for (double h : geometric_grid(cfg)) {
      if (h < 1e-9) break;
      ExtReal side = ExtReal::neg_inf();
      bool any = false;
      auto look = [&](double s) {
        if (s < 0.0 || s > 1.0) return;
        ExtReal v = eval01(fn, s);
        if (!v.is_finite()) return;
        if (!any) {
          side = v;
          any = true;
        } else {
          side = check_usc ? max(side, v) : min(side, v);
        }
      };
      look(t - h);
      look(t + h);
      if (any) neigh.emplace_back(h, side);
    }
    if (neigh.size() < 3) continue;
    // Tail (smallest h) extremum of the neighbour values.
    ExtReal tail = neigh.back().second;
    size_t start = neigh.size() >= 5 ? neigh.size() - 5 : 0;
    for (size_t k = start; k < neigh.size(); ++k)
      tail = check_usc ? max(tail, neigh[k].second) : min(tail, neigh[k].second);
    if (!tail.is_finite()) continue;
    double gap = check_usc ? tail.value() - vt.value() : vt.value() - tail.value();
    if (gap > kScBreach && (!out.found || gap > out.gap)) {
      out.found = true;
      out.at = t;
      out.gap = gap;
    }
  }
  return out;
}

Verdict mvt_check_impl(const Fn01& phi, const Fn01& gamma, const std::vector<double>& C,
                       bool upper_phi, const GridConfig& cfg) {
  cfg.validate();
  ExtReal phi0 = eval01(phi, 0.0), gamma0 = eval01(gamma, 0.0);
  if (!phi0.is_finite() || !gamma0.is_finite())
    throw PreconditionError("mvt check: phi(0) and gamma(0) must be finite");

  Verdict verdict;
  bool hyp_ok = true;

  for (int i = 0; i < kScanN && hyp_ok; ++i) {
    double t = static_cast<double>(i) / kScanN;
    bool skip = false;
    for (double c : C)
      if (std::abs(t - c) <= 1.0 / kScanN) skip = true;
    if (skip) continue;
    if (!eval01(phi, t).is_finite() || !eval01(gamma, t).is_finite()) continue;

    TailEstimate pt = dini_tail(phi, t, cfg);
    TailEstimate gt = dini_tail(gamma, t, cfg);
    ExtReal pr = upper_phi ? refined_tail_value(pt, cfg.window, true)
                           : refined_tail_value(pt, cfg.window, false);
    ExtReal gr = refined_tail_value(gt, cfg.window, false);
    if (pr.is_pos_inf() || gr.is_neg_inf()) {
      hyp_ok = false;
      verdict.note("finiteness breach at t=" + std::to_string(t) +
                   " (no real rho(t) can separate the subderivatives)");
      verdict.margin("hypothesis_breach_t", t);
    } else if (!leq_with_slack(pr, gr, cfg.tol)) {
      hyp_ok = false;
      verdict.note("subderivative ordering fails at t=" + std::to_string(t));
      verdict.margin("hypothesis_breach_t", t);
    }
  }

  ExtReal phi1 = eval01(phi, 1.0), gamma1 = eval01(gamma, 1.0);
  ExtReal phi_gap = phi1 - phi0;
  ExtReal gamma_gap = gamma1 - gamma0;
  verdict.margin("phi_gap", phi_gap.as_double());
  verdict.margin("gamma_gap", gamma_gap.as_double());
  bool concl = leq_with_slack(phi_gap, gamma_gap, cfg.tol);

  if (!concl || !hyp_ok) {
    BreachScan usc = semicontinuity_breach(gamma, true, cfg);
    if (usc.found) {
      verdict.note("gamma violates upper semicontinuity at t=" + std::to_string(usc.at));
      verdict.margin("gamma_usc_breach_t", usc.at);
    }
    BreachScan lsc = semicontinuity_breach(phi, false, cfg);
    if (lsc.found) {
      verdict.note("phi violates lower semicontinuity at t=" + std::to_string(lsc.at));
      verdict.margin("phi_lsc_breach_t", lsc.at);
    }
  }

  if (!hyp_ok) {
    verdict.outcome = Outcome::inconclusive;
    verdict.note("hypothesis scan failed; conclusion " +
                 std::string(concl ? "holds" : "is violated") + " but is not implied");
  } else if (concl) {
    verdict.outcome = Outcome::holds;
  } else {
    verdict.outcome = Outcome::fails;
    verdict.note("conclusion violated: phi(1)-phi(0) > gamma(1)-gamma(0)");
  }
  return verdict;
}

}  // namespace

Verdict mvt_semicontinuous_check(const Fn01& phi, const Fn01& gamma, const GridConfig& cfg) {
  return mvt_check_impl(phi, gamma, {}, /*upper_phi=*/false, cfg);
}

Verdict mvt_continuous_check(const Fn01& phi, const Fn01& gamma, const std::vector<double>& C,
                             const GridConfig& cfg) {
  if (phi.continuity != Fn01::Continuity::continuous ||
      gamma.continuity != Fn01::Continuity::continuous)
    throw PreconditionError("mvt_continuous_check: both functions must carry continuous metadata");
  return mvt_check_impl(phi, gamma, C, /*upper_phi=*/true, cfg);
}

Fn01 random_piecewise_quadratic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_breaks(1, 5);
  std::uniform_int_distribution<int> lattice(1, 999);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> drop_size(0.05, 0.5);

  int nb = n_breaks(rng);
  std::vector<double> breaks;
  for (int i = 0; i < nb; ++i) breaks.push_back(static_cast<double>(lattice(rng)) / 1000.0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  struct Piece {
    double a, b, c;
  };
  std::vector<Piece> pieces(breaks.size() + 1);
  for (auto& p : pieces) p = {coeff(rng), coeff(rng), coeff(rng)};

  // Value at each breakpoint: min of the one-sided limits, minus an
  // optional drop (0 or >= 0.05) so the function stays lsc and the dip is
  // exactly on the scan lattice.
  std::vector<double> bvals(breaks.size());
  auto piece_val = [&](size_t i, double t) {
    return pieces[i].a * t * t + pieces[i].b * t + pieces[i].c;
  };
  for (size_t i = 0; i < breaks.size(); ++i) {
    double left = piece_val(i, breaks[i]);
    double right = piece_val(i + 1, breaks[i]);
    double drop = unit(rng) < 0.5 ? 0.0 : drop_size(rng);
    bvals[i] = std::min(left, right) - drop;
  }

  auto breaks_copy = breaks;
  Fn01 fn;
  fn.continuity = Fn01::Continuity::lsc;
  fn.eval = [breaks = std::move(breaks_copy), pieces, bvals, piece_val](double t) -> ExtReal {
    for (size_t i = 0; i < breaks.size(); ++i)
      if (t == breaks[i]) return ExtReal(bvals[i]);
    size_t piece = 0;
    while (piece < breaks.size() && t > breaks[piece]) ++piece;
    return ExtReal(piece_val(piece, t));
  };
  return fn;
}

}  // namespace subsmooth
