#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dihedral/counting.hpp"
#include "dihedral/numeric.hpp"

namespace dihedral {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  int n;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
  double eps = kDefaultTolerance;
  std::uint64_t max_tuples = kDefaultMaxTuples;
  // Largest line sum handed to the brute-force oracles; each r is also
  // skipped once its tuple count passes max_tuples.
  int oracle_r_max = 5;
};

/// Runs the group, permutation, character, kernel/rank, J-identity, counting,
/// idempotent, eigenbasis and quaternion checks for one n.
VerifyReport verify_all(int n, const VerifyOptions& opts = {});

}  // namespace dihedral
