#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfw/gf2n.hpp"

namespace bfw {

struct Check {
  std::string name;
  bool pass = false;
  // Informational checks are reported but never fail a run.
  bool gating = true;
  std::string detail;
};

struct VerificationReport {
  std::string theorem;
  int m = 0;
  std::optional<Elem> mu;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.gating; });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace bfw
