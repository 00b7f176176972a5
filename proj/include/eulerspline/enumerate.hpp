#pragma once

#include <cstdint>

namespace eulerspline {

/// Bounds on brute-force enumeration. Runtime configuration, not hard limits.
struct EnumerationLimits {
  /// Largest d for which S_d is enumerated.
  std::uint64_t max_permutation_d = 10;
  /// Largest d for which S_{d+1} is enumerated for refined counts.
  std::uint64_t max_refined_d = 8;
  /// Largest n^d * d! accepted by the indexed-permutation enumerator.
  std::uint64_t indexed_budget = 10'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Number of workers to use for `limits`.
unsigned worker_count(const EnumerationLimits& limits);

}  // namespace eulerspline
