#pragma once

#include "propo/table.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace propo {

enum class GradingFault {
  mismatch,      // integral, nonnegative q-power that differs from the file
  non_integral,  // deg(s) + 1 - deg(t) is not a multiple of r
  negative,      // would need a negative q-power
};

struct GradingViolation {
  std::size_t source = 0;
  std::size_t target = 0;
  int declared_q_power = 0;
  GradingFault fault = GradingFault::mismatch;
  std::optional<int> expected_q_power;  // set for `mismatch`
};

struct GradingReport {
  bool ok = true;
  std::vector<GradingViolation> violations;
  /// degree_histogram[k] = number of basis elements of degree k.
  std::vector<std::size_t> degree_histogram;
  /// Non-fatal findings, e.g. empty rows (which rule out strong connectivity).
  std::vector<std::string> warnings;
};

/// Every term of h*alpha_s with target alpha_t must satisfy
///   deg(t) = deg(s) + 1 - r * q_power.
GradingReport validate_grading(const ChevalleyTable& table);

std::string describe(const GradingViolation& v, const ChevalleyTable& table);

bool is_palindrome(const std::vector<std::size_t>& histogram);

}  // namespace propo
