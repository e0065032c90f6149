#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hardy {

// One named check with a printable one-line detail. report_only entries carry
// empirical observations with no pass/fail semantics and never fail a suite.
struct CheckResult {
  std::string name;
  bool passed = false;
  bool report_only = false;
  std::string detail;
};

bool suite_passed(const std::vector<CheckResult>& checks);

// Exact coefficient table, support, tail and positivity of the sextic-witness
// polynomial identity.
std::vector<CheckResult> verify_monster_suite();

// Triangle inequality for p in {0, 0.25, 0.5, 0.75} on degree-1 coefficient
// pairs and on 2x2 matrices, `trials` seeded random pairs each.
std::vector<CheckResult> verify_triangle_suite(std::uint64_t seed,
                                               std::size_t trials = 10000);

// Empirical range of the dual-H^1 to H^4 ratio over seeded random 3x3
// matrices; report-only, no proven bound exists.
std::vector<CheckResult> verify_matrix3_suite(std::uint64_t seed,
                                              std::size_t samples = 200);

// Extremal pairs from seeded random directions: duality equality, unit dual
// norm, and the three classical inequality slacks.
std::vector<CheckResult> verify_corollaries_suite(std::uint64_t seed,
                                                  std::size_t directions = 100);

std::vector<CheckResult> verify_all(std::uint64_t seed);

}  // namespace hardy
