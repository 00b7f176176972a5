#pragma once

#include <cstdint>

#include "eulerspline/numcore.hpp"
#include "eulerspline/polyring.hpp"

namespace eulerspline {

/// The slab {x in scale * C^d : lower <= sum x_i <= upper}.
struct SliceSpec {
  std::uint64_t d = 1;
  std::uint64_t scale = 1;
  Rational lower;
  Rational upper;

  /// Throws Error unless d >= 1, scale >= 1 and 0 <= lower <= upper <= scale * d.
  void validate() const;
};

/// T^d_k = {x in C^d : k-1 <= sum x_i <= k}, clipped to the cube.
SliceSpec eulerian_slice(std::uint64_t d, std::int64_t k);

/// X^d_{n,k} = {x in n C^d : (k-1)n + 1 <= sum x_i <= kn + 1}, clipped to the cube.
SliceSpec descent_slice(std::uint64_t d, std::uint64_t n, std::int64_t k);

/// Volumes are normalized so the unit cube C^d has volume d!.
struct VolumeEstimate {
  Rational estimate;
  /// Outward-rounded rational bound on d! s^d sqrt(p(1-p)/samples).
  Rational standard_error;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// 64-bit splitmix generator: state += 0x9E3779B97F4A7C15, then two
/// xor-shift-multiply rounds and a closing xor-shift.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Top 53 bits of next(): a uniform sample u with u / 2^53 in [0, 1).
  std::uint64_t next_unit53() { return next() >> 11U; }

 private:
  std::uint64_t state_;
};

/// Samples per block of the Monte Carlo estimator. Block b uses the
/// generator seeded with seed + b, so results do not depend on threading.
inline constexpr std::uint64_t kMonteCarloBlock = 1U << 16U;

/// Monte Carlo estimate of the normalized volume of `spec`.
/// `threads == 0` picks the hardware concurrency.
VolumeEstimate mc_volume(const SliceSpec& spec, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

/// Exact volume polynomial in lambda of lambda T^d_k + T^d_{k+1}, i.e.
/// V(X^d_{lambda+1,k}) = d! (lambda+1)^d B_{d+1}(k + 1/(lambda+1)),
/// recovered by interpolation through lambda = 0..d.
Polynomial minkowski_poly(std::uint64_t d, std::uint64_t k);

/// V(T^d_k, d-j; T^d_{k+1}, j) = [lambda^{d-j}] minkowski_poly(d,k) / C(d, d-j).
Rational mixed_volume(std::uint64_t d, std::uint64_t k, std::uint64_t j);

}  // namespace eulerspline
