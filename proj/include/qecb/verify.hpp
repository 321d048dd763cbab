#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qecb {

/// One inequality check: pass iff lhs <= rhs + tol, margin = rhs + tol - lhs.
struct CheckResult {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
};

/// Runs every property suite whose name contains `filter` (empty = all).
/// Deterministic per seed.
std::vector<CheckResult> run_verify(const std::string& filter = "",
                                    std::uint64_t seed = 1);

}  // namespace qecb
