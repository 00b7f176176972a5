#include "eulerspline/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>
#include <vector>

#include "eulerspline/splinecore.hpp"

namespace eulerspline {

namespace {

using u128 = unsigned __int128;

Integer power(std::uint64_t base, std::uint64_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

Integer two_pow(std::uint64_t e) { return power(2, e); }

u128 to_u128(const Integer& v) {
  if (v <= 0) return 0;
  u128 out = 0;
  const std::size_t words = (mpz_sizeinbase(v.get_mpz_t(), 2) + 63) / 64;
  if (words > 2) return ~static_cast<u128>(0);
  std::uint64_t buf[2] = {0, 0};
  mpz_export(buf, nullptr, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
  out = (static_cast<u128>(buf[1]) << 64U) | buf[0];
  return out;
}

/// Ceiling of sqrt(v) for v >= 0.
Integer ceil_sqrt(const Integer& v) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  if (root * root < v) root += 1;
  return root;
}

}  // namespace

void SliceSpec::validate() const {
  if (d == 0) throw Error("slice dimension must be at least 1");
  if (scale == 0) throw Error("slice scale must be at least 1");
  const Rational top(Integer(scale) * Integer(d));
  if (lower.sign() < 0 || upper < lower || top < upper) {
    throw Error("slice bounds must satisfy 0 <= lower <= upper <= scale * d");
  }
}

SliceSpec eulerian_slice(std::uint64_t d, std::int64_t k) { return descent_slice(d, 1, k - 1); }

SliceSpec descent_slice(std::uint64_t d, std::uint64_t n, std::int64_t k) {
  const Rational top(Integer(n) * Integer(d));
  const Rational kk(Integer(static_cast<long>(k)));
  const Rational nn{Integer(n)};
  // n = 1 gives {k <= sum <= k + 1}, i.e. T^d_{k+1}.
  Rational lower = (kk - Rational(1)) * nn + Rational(1);
  Rational upper = kk * nn + Rational(1);
  lower = std::clamp(lower, Rational(0), top);
  upper = std::clamp(upper, Rational(0), top);
  return SliceSpec{d, n, lower, upper};
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

VolumeEstimate mc_volume(const SliceSpec& spec, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  spec.validate();
  if (samples == 0) throw Error("Monte Carlo needs at least one sample");

  // Coordinates are s * u_i / 2^53 with integer u_i, so the slab test is
  // lower * 2^53 / s <= sum u_i <= upper * 2^53 / s on integers.
  const Integer unit = two_pow(53);
  const Rational per_unit = Rational(unit) / Rational(Integer(spec.scale));
  const u128 lo = to_u128((spec.lower * per_unit).ceil());
  const u128 hi = to_u128((spec.upper * per_unit).floor());
  const std::uint64_t d = spec.d;

  const std::uint64_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  unsigned workers = threads > 0 ? threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

  std::atomic<std::uint64_t> next_block{0};
  std::vector<std::uint64_t> hits(workers, 0);
  auto worker = [&](unsigned w) {
    std::uint64_t local = 0;
    for (std::uint64_t b = next_block++; b < blocks; b = next_block++) {
      SplitMix64 rng(seed + b);
      const std::uint64_t begin = b * kMonteCarloBlock;
      const std::uint64_t end = std::min(samples, begin + kMonteCarloBlock);
      for (std::uint64_t s = begin; s < end; ++s) {
        u128 sum = 0;
        for (std::uint64_t i = 0; i < d; ++i) sum += rng.next_unit53();
        local += (lo <= sum && sum <= hi) ? 1 : 0;
      }
    }
    hits[w] = local;
  };
  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w);
  }
  std::uint64_t total_hits = 0;
  for (auto h : hits) total_hits += h;

  const Integer volume = factorial(d) * power(spec.scale, d);
  const Integer n_samples(static_cast<unsigned long>(samples));
  const Integer n_hits(static_cast<unsigned long>(total_hits));

  VolumeEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.estimate = Rational(Integer(volume * n_hits), n_samples);
  // sqrt(h (N - h) / N^3) <= ceil_sqrt(ceil(h (N - h) 2^128 / N^3)) / 2^64.
  const Integer scale = two_pow(128);
  const Rational variance_scaled(Integer(n_hits * (n_samples - n_hits) * scale),
                                 Integer(n_samples * n_samples * n_samples));
  const Integer root = ceil_sqrt(variance_scaled.ceil());
  out.standard_error = Rational(Integer(volume * root), two_pow(64));
  return out;
}

Polynomial minkowski_poly(std::uint64_t d, std::uint64_t k) {
  if (d == 0) throw Error("dimension must be at least 1");
  if (k > d) throw Error("slice index k outside 0..d");
  const SplineOrder order(d + 1);
  const Rational scale(factorial(d));
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(d + 1);
  for (std::uint64_t node = 0; node <= d; ++node) {
    const Rational dilation(Integer(node + 1));
    const Rational x = Rational(Integer(k)) + Rational(1) / dilation;
    const Rational value = scale * int_pow(dilation, d) * bspline_eval_explicit(order, x);
    points.emplace_back(Rational(Integer(node)), value);
  }
  return interpolate(points);
}

Rational mixed_volume(std::uint64_t d, std::uint64_t k, std::uint64_t j) {
  if (j > d) throw Error("mixed volume index j outside 0..d");
  const Polynomial poly = minkowski_poly(d, k);
  const Rational value = poly.coefficient(d - j) / Rational(binomial(d, static_cast<std::int64_t>(d - j)));
  if (value.sign() < 0) throw NegativeResult("mixed volume produced " + value.to_string());
  return value;
}

}  // namespace eulerspline
