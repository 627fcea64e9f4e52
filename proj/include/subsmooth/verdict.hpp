#pragma once

#include <map>
#include <string>
#include <vector>

namespace subsmooth {

enum class Outcome { holds, fails, inconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    default: return "inconclusive";
  }
}

// Three-valued check result with numeric margins and free-form diagnostics.
struct Verdict {
  Outcome outcome = Outcome::inconclusive;
  std::map<std::string, double> margins;
  std::vector<std::string> notes;

  bool holds() const { return outcome == Outcome::holds; }
  bool fails() const { return outcome == Outcome::fails; }
  bool inconclusive() const { return outcome == Outcome::inconclusive; }

  Verdict& note(std::string s) {
    notes.push_back(std::move(s));
    return *this;
  }
  Verdict& margin(const std::string& key, double v) {
    margins[key] = v;
    return *this;
  }

  static Verdict make(Outcome o) {
    Verdict v;
    v.outcome = o;
    return v;
  }
  static Verdict make_holds() { return make(Outcome::holds); }
  static Verdict make_fails() { return make(Outcome::fails); }
  static Verdict make_inconclusive() { return make(Outcome::inconclusive); }
};

}  // namespace subsmooth
