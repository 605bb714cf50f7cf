#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "agmpi/mpreal.hpp"

namespace agmpi::detail {

// Read-mostly cache of a constant, keyed by working bits. Any entry at least
// as precise as the request is rounded down and reused. A miss computes
// outside the lock with some spare guard bits, so two threads may both
// compute; either result is valid.
class ConstantCache {
 public:
  static constexpr long kSpareBits = 64;

  template <typename Compute>
  Real get(const Precision& p, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.lower_bound(p.working_bits()); it != values_.end()) {
        return it->second.with_precision(p);
      }
    }
    const Precision padded{p.decimal_digits, p.bits, p.guard_bits + kSpareBits};
    Real value = compute(padded);
    std::unique_lock lock(mutex_);
    auto it = values_.try_emplace(padded.working_bits(), std::move(value)).first;
    return it->second.with_precision(p);
  }

 private:
  std::shared_mutex mutex_;
  std::map<long, Real> values_;
};

}  // namespace agmpi::detail
