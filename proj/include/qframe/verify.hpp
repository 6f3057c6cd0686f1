#pragma once

/**
 * @file verify.hpp
 * @brief Invariant battery run against a single frame.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "qframe/report.hpp"

namespace qframe {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::vector<std::string> failures() const;
  [[nodiscard]] Json to_json() const;
};

/// Frame inequality, A = W^dagger W, dual and tight constructions, gauge
/// invariance and recovery, kernel properties, the evaluation identity and
/// the equivalence relations. Auxiliary random draws come from `seed`.
VerifyResult verify_suite(const QuadFrame& f, const ToleranceSet& tol, std::uint64_t seed);

/// Single failed check for inputs that cannot be built into a frame.
VerifyResult construction_failure(const std::string& name, const std::string& detail);

}  // namespace qframe
