#pragma once

#include <cmath>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <vector>

#include "subsmooth/errors.hpp"

namespace subsmooth {

inline constexpr int kMaxDim = 5;

// Point / direction in R^n, n <= 5.
class Vec {
 public:
  Vec() : coords_(1, 0.0) {}
  explicit Vec(int dim) : coords_(check_dim(dim), 0.0) {}
  Vec(std::initializer_list<double> cs) : coords_(cs) { check_dim(static_cast<int>(coords_.size())); }
  explicit Vec(std::vector<double> cs) : coords_(std::move(cs)) {
    check_dim(static_cast<int>(coords_.size()));
  }
  static Vec scalar(double x) { return Vec{x}; }

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }

  // 1D convenience accessor.
  double x() const {
    if (dim() != 1) throw ContractError("Vec: x() requires dim 1");
    return coords_[0];
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_same(a, b);
    Vec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    check_same(a, b);
    Vec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend Vec operator*(double s, const Vec& a) {
    Vec r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
  }
  friend Vec operator-(const Vec& a) { return -1.0 * a; }

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }

  friend double dot(const Vec& a, const Vec& b) {
    check_same(a, b);
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
  }

  double norm() const { return std::sqrt(dot(*this, *this)); }

  Vec normalized() const {
    double n = norm();
    if (n == 0.0) throw ContractError("Vec: cannot normalize the zero vector");
    return (1.0 / n) * (*this);
  }

  bool is_zero() const {
    for (double c : coords_)
      if (c != 0.0) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << coords_[static_cast<size_t>(i)];
    os << ")";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }

 private:
  static int check_dim(int d) {
    if (d < 1 || d > kMaxDim) throw ContractError("Vec: dim must be in [1, 5]");
    return d;
  }
  static void check_same(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw ContractError("Vec: dimension mismatch");
  }

  std::vector<double> coords_;
};

}  // namespace subsmooth
