#include "subsmooth/subgradient_set.hpp"

namespace subsmooth {

std::string SubgradientSet::form_name() const {
  struct V {
    std::string operator()(const Empty&) const { return "empty"; }
    std::string operator()(const Interval&) const { return "interval"; }
    std::string operator()(const Polytope&) const { return "polytope"; }
    std::string operator()(const Ball&) const { return "ball"; }
    std::string operator()(const SupportOracle&) const { return "support_oracle"; }
  };
  return std::visit(V{}, form_);
}

ExtReal support(const SubgradientSet& s, const Vec& u) {
  if (u.dim() != s.dim()) throw ContractError("support: dimension mismatch");
  struct V {
    const Vec& u;
    ExtReal operator()(const SubgradientSet::Empty&) const { return ExtReal::neg_inf(); }
    ExtReal operator()(const SubgradientSet::Interval& iv) const {
      double d = u[0];
      if (d > 0.0) return iv.hi * d;
      if (d < 0.0) return iv.lo * d;
      return ExtReal(0.0);
    }
    ExtReal operator()(const SubgradientSet::Polytope& p) const {
      ExtReal best = ExtReal::neg_inf();
      for (const Vec& v : p.vertices) best = max(best, ExtReal(dot(v, u)));
      return best;
    }
    ExtReal operator()(const SubgradientSet::Ball& b) const {
      return ExtReal(dot(b.center, u) + b.radius * u.norm());
    }
    ExtReal operator()(const SubgradientSet::SupportOracle& o) const { return o.sigma(u); }
  };
  return std::visit(V{u}, s.form_);
}

}  // namespace subsmooth
