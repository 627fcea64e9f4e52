#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "subsmooth/ext_real.hpp"
#include "subsmooth/vec.hpp"

namespace subsmooth {

// Closed convex subset of R^n in one of four concrete forms, or as a bare
// support-function oracle. Every downstream consumer needs only support
// values, so no convex-hull machinery lives here.
class SubgradientSet {
 public:
  struct Empty {};
  struct Interval {
    ExtReal lo, hi;  // dim 1 only, lo <= hi; endpoints may be infinite
  };
  struct Polytope {
    std::vector<Vec> vertices;  // nonempty
  };
  struct Ball {
    Vec center;
    double radius;
  };
  struct SupportOracle {
    std::function<ExtReal(const Vec&)> sigma;
  };

  static SubgradientSet empty(int dim) { return SubgradientSet(Empty{}, dim); }
  static SubgradientSet interval(ExtReal lo, ExtReal hi) {
    if (lo > hi) throw ContractError("SubgradientSet: interval requires lo <= hi");
    return SubgradientSet(Interval{lo, hi}, 1);
  }
  static SubgradientSet singleton(const Vec& g) { return polytope({g}); }
  static SubgradientSet polytope(std::vector<Vec> vertices) {
    if (vertices.empty()) throw ContractError("SubgradientSet: polytope needs vertices");
    int d = vertices.front().dim();
    for (const Vec& v : vertices)
      if (v.dim() != d) throw ContractError("SubgradientSet: mixed vertex dimensions");
    return SubgradientSet(Polytope{std::move(vertices)}, d);
  }
  static SubgradientSet ball(Vec center, double radius) {
    if (radius < 0.0) throw ContractError("SubgradientSet: negative radius");
    int d = center.dim();
    return SubgradientSet(Ball{std::move(center), radius}, d);
  }
  static SubgradientSet support_oracle(std::function<ExtReal(const Vec&)> sigma, int dim) {
    return SubgradientSet(SupportOracle{std::move(sigma)}, dim);
  }

  int dim() const { return dim_; }
  bool is_empty() const { return std::holds_alternative<Empty>(form_); }
  bool is_interval() const { return std::holds_alternative<Interval>(form_); }
  const Interval& as_interval() const { return std::get<Interval>(form_); }
  bool is_polytope() const { return std::holds_alternative<Polytope>(form_); }
  const Polytope& as_polytope() const { return std::get<Polytope>(form_); }

  std::string form_name() const;

  friend ExtReal support(const SubgradientSet& s, const Vec& u);

 private:
  using Form = std::variant<Empty, Interval, Polytope, Ball, SupportOracle>;
  SubgradientSet(Form f, int dim) : form_(std::move(f)), dim_(dim) {}

  Form form_;
  int dim_;
};

// sup { <g, u> : g in S }; -inf for the empty set.
ExtReal support(const SubgradientSet& s, const Vec& u);

}  // namespace subsmooth
