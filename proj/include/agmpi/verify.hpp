#pragma once

// Invariant suites behind `agm-pi verify`.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agmpi {

enum class Suite { equivalence, bounds, legendre, theta, minpoly, roundtrip, all };

struct CheckResult {
  std::string name;
  std::string residual;   // measured value, scientific notation
  std::string tolerance;  // what it was compared against
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// Runs one suite (or all of them) at `digits` decimal digits. Random samples
/// come from a fixed seed, so reports are reproducible.
VerifyReport run_suite(Suite suite, long digits);

}  // namespace agmpi
