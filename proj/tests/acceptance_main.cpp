// One line per acceptance criterion, followed by its individual checks.
// Exit status is nonzero when any criterion fails.
#include "wavset/acceptance.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240607ULL;
  const auto report = wavset::run_acceptance(seed);
  for (const auto& c : report.criteria) {
    std::printf("%s criterion %d: %s (%.2f s)\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.seconds);
    for (const auto& line : c.checks) std::printf("    %s\n", line.c_str());
  }
  std::printf("%s: %.2f s total\n", report.passed ? "ALL PASS" : "SOME FAILED", report.seconds);
  return report.passed ? 0 : 1;
}
