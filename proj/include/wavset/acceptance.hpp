#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wavset {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  /// Individual checks in the order they ran, e.g. "journe translation shifts: ok".
  std::vector<std::string> checks;
  double seconds;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  double seconds;
  bool passed;
};

/// Runs acceptance criteria 1-9 and the end-to-end budget check (10).
/// Randomized criteria draw from a generator seeded with `seed`.
AcceptanceReport run_acceptance(std::uint64_t seed);

}  // namespace wavset
