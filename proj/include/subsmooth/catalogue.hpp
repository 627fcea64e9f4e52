#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subsmooth/grid.hpp"
#include "subsmooth/scalar_fn.hpp"
#include "subsmooth/subgradient_set.hpp"
#include "subsmooth/verdict.hpp"

namespace subsmooth {

// Built-in fixture functions with closed-form radial-subderivative and
// subdifferential oracles; ground truth for the whole test surface.
struct CatalogueEntry {
  std::string name;
  ScalarFn fn;

  // f^r(x; u) in closed form (callable only where f(x) is finite).
  std::function<ExtReal(const Vec&, const Vec&)> exact_radial;
  // f^r_+(x; u) where it differs from f^r; absent means identical.
  std::optional<std::function<ExtReal(const Vec&, const Vec&)>> exact_radial_upper;
  // The reference subdifferential (Moreau-Rockafellar for convex entries,
  // Clarke otherwise); empty outside dom f.
  std::function<SubgradientSet(const Vec&)> exact_subdiff;

  struct Labels {
    bool convex = false;
    bool lipschitz = false;
    bool usc_counterexample = false;
    std::vector<std::pair<Vec, Vec>> upper_semismooth_at;
    std::vector<std::pair<Vec, Vec>> strictly_upper_semismooth_at;
    std::vector<std::pair<Vec, Vec>> not_upper_semismooth_at;
  } labels;

  // (x, u) pairs used by the numeric-vs-exact cross checks.
  std::vector<std::pair<Vec, Vec>> check_points;
};

namespace catalogue {

const CatalogueEntry& get(const std::string& name);
std::vector<std::string> names();
bool has(const std::string& name);

// A machine-checkable fact asserted about a fixture, tagged by the module
// whose machinery verifies it.
struct PaperFact {
  std::string entry;
  std::string module_tag;
  std::string fact;
  std::function<Verdict(const GridConfig&)> check;
};

std::vector<PaperFact> paper_fixture_suite();

}  // namespace catalogue

}  // namespace subsmooth
