#pragma once

// Front end of the agm-pi tool: agm-pi <pi|fn|table|verify|bench> [flags].
//
// Exit codes: 0 success, 2 usage or domain error, 3 verification failure.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agmpi/mpreal.hpp"
#include "agmpi/piagm.hpp"

namespace agmpi {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

enum class PiAlgo { gl, gl1, bb1, bb2, bb4, madhava, ramanujan, chudnovsky };

std::optional<PiAlgo> parse_pi_algo(std::string_view name);
std::string_view pi_algo_name(PiAlgo algo);

struct PiComputation {
  Real value;
  /// Iterations for the AGM algorithms, terms for the series.
  int iterations = 0;
  /// Per-iteration outputs when requested (AGM algorithms only).
  std::vector<PiIterate> iterates;
};

/// Iterations (or terms) that reach the precision of `p`.
int default_iterations(PiAlgo algo, const Precision& p);

/// Runs one algorithm. GL without `keep_iterates` only divides for the final
/// output.
PiComputation compute_pi(PiAlgo algo, const Precision& p,
                         std::optional<int> iterations = std::nullopt,
                         bool keep_iterates = false);

/// Precision for `digits`, with the guard taken from AGMPI_GUARD_BITS when
/// set. Throws std::invalid_argument for a malformed value.
Precision cli_precision(long digits);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace agmpi
