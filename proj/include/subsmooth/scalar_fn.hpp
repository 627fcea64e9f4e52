#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "subsmooth/ext_real.hpp"
#include "subsmooth/vec.hpp"

namespace subsmooth {

struct FnMeta {
  bool convex = false;
  bool locally_lipschitz = false;
  std::optional<double> lipschitz_const;
};

struct Box {
  Vec lo;
  Vec hi;
};

// Evaluation oracle for a proper lsc function R^n -> (-inf, +inf].
// eval must be deterministic and never return -inf.
struct ScalarFn {
  std::function<ExtReal(const Vec&)> eval;
  int dim = 1;
  FnMeta meta{};
  std::optional<Box> domain_hint{};

  ExtReal operator()(const Vec& x) const {
    ExtReal v = eval(x);
    if (v.is_neg_inf()) throw ContractError("ScalarFn: oracle returned -inf (not proper)");
    return v;
  }
};

inline ScalarFn make_fn(std::function<ExtReal(const Vec&)> f, int dim, FnMeta meta = {}) {
  return ScalarFn{std::move(f), dim, meta, std::nullopt};
}

// 1D helper: wrap a double -> double function.
inline ScalarFn make_fn_1d(std::function<double(double)> f, FnMeta meta = {}) {
  return make_fn([f = std::move(f)](const Vec& x) { return ExtReal(f(x.x())); }, 1, meta);
}

}  // namespace subsmooth
