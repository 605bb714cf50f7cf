#pragma once

// gtest glue on top of the shared oracles: readable Real failures and a
// seeded property-test driver.

#include <gtest/gtest.h>

#include <functional>
#include <ostream>
#include <string>

#include "oracle_support.hpp"

namespace agmpi {

// Readable gtest failure messages.
inline void PrintTo(const Real& x, std::ostream* os) {
  *os << to_scientific(x, 20);
}

}  // namespace agmpi

namespace agmpi::testing {

/// Runs `body` on `count` cases drawn from a generator seeded with `seed`,
/// tagging failures with the case index.
inline void for_all(int count, std::uint64_t seed,
                    const std::function<void(Gen&, int)>& body) {
  Gen gen(seed);
  for (int i = 0; i < count; ++i) {
    SCOPED_TRACE("case " + std::to_string(i) + ", seed " +
                 std::to_string(seed));
    body(gen, i);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace agmpi::testing
