#pragma once

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "subsmooth/errors.hpp"

namespace subsmooth {

// Extended real value: finite, +inf or -inf, with the total order
// -inf < finite < +inf and guarded arithmetic ( (+inf) + (-inf) is an
// error, never a silent value).
class ExtReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  constexpr ExtReal() : kind_(Kind::Finite), value_(0.0) {}

  // Implicit from double; IEEE infinities normalize to the matching kind.
  ExtReal(double v) {
    if (std::isinf(v)) {
      kind_ = v > 0 ? Kind::PosInf : Kind::NegInf;
      value_ = 0.0;
    } else if (std::isnan(v)) {
      throw ContractError("ExtReal: NaN is not an extended real");
    } else {
      kind_ = Kind::Finite;
      value_ = v;
    }
  }

  static constexpr ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_inf() const { return kind_ != Kind::Finite; }

  double value() const {
    if (!is_finite()) throw ContractError("ExtReal: value() on an infinite value");
    return value_;
  }

  // Finite value, or +-HUGE_VAL for the infinities (for serialization).
  double as_double() const {
    switch (kind_) {
      case Kind::PosInf: return std::numeric_limits<double>::infinity();
      case Kind::NegInf: return -std::numeric_limits<double>::infinity();
      default: return value_;
    }
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ == b.kind_) {
      return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }
    if (a.is_neg_inf()) return true;
    if (b.is_neg_inf()) return false;
    return b.is_pos_inf();
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) return ExtReal(a.value_ + b.value_);
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
      throw ContractError("ExtReal: (+inf) + (-inf) is undefined");
    return a.is_inf() ? a : b;
  }

  friend ExtReal operator-(const ExtReal& a) {
    if (a.is_pos_inf()) return neg_inf();
    if (a.is_neg_inf()) return pos_inf();
    return ExtReal(-a.value_);
  }

  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

  // Scaling: 0 * (+-inf) = 0 here (sup over the empty perturbation,
  // support-function convention), negative factors flip infinities.
  friend ExtReal operator*(const ExtReal& a, double s) {
    if (a.is_finite()) return ExtReal(a.value_ * s);
    if (s == 0.0) return ExtReal(0.0);
    if (s > 0.0) return a;
    return -a;
  }
  friend ExtReal operator*(double s, const ExtReal& a) { return a * s; }

  std::string str() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.str(); }

 private:
  constexpr explicit ExtReal(Kind k) : kind_(k), value_(0.0) {}

  Kind kind_;
  double value_;
};

inline ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }
inline ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

// a <= b + slack, with infinities compared by kind (+inf <= +inf holds,
// finite <= +inf holds, +inf <= finite fails).
inline bool leq_with_slack(const ExtReal& a, const ExtReal& b, double slack) {
  if (a.is_neg_inf() || b.is_pos_inf()) return true;
  if (a.is_pos_inf()) return false;
  if (b.is_neg_inf()) return false;
  return a.value() <= b.value() + slack;
}

// |a - b| <= tol in the extended sense (equal infinities agree).
inline bool close(const ExtReal& a, const ExtReal& b, double tol) {
  if (a.is_inf() || b.is_inf()) return a.kind() == b.kind();
  return std::abs(a.value() - b.value()) <= tol;
}

}  // namespace subsmooth
