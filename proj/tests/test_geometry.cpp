#include <vector>

#include <gtest/gtest.h>

#include "eulerspline/descent.hpp"
#include "eulerspline/eulerian.hpp"
#include "eulerspline/geometry.hpp"

using namespace eulerspline;

namespace {

bool within(const VolumeEstimate& v, const Rational& exact, long sigmas) {
  Rational diff = v.estimate - exact;
  if (diff.sign() < 0) diff = -diff;
  return diff <= Rational(sigmas) * v.standard_error;
}

}  // namespace

TEST(SplitMix64, ReferenceStream) {
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xE220A8397B1DCDAFULL);
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
  SplitMix64 unit(1234567);
  EXPECT_EQ(unit.next_unit53(), 6457827717110365317ULL >> 11U);
}

TEST(SliceSpec, Validation) {
  EXPECT_NO_THROW((SliceSpec{2, 1, 0, 2}.validate()));
  EXPECT_THROW((SliceSpec{2, 1, -1, 1}.validate()), Error);
  EXPECT_THROW((SliceSpec{2, 1, 1, 3}.validate()), Error);
  EXPECT_THROW((SliceSpec{2, 1, Rational(3, 2), 1}.validate()), Error);
  EXPECT_THROW((SliceSpec{0, 1, 0, 0}.validate()), Error);
  EXPECT_THROW((SliceSpec{2, 0, 0, 0}.validate()), Error);
}

TEST(SliceSpec, NamedSlices) {
  const SliceSpec t = eulerian_slice(3, 2);
  EXPECT_EQ(t.scale, 1U);
  EXPECT_EQ(t.lower, 1);
  EXPECT_EQ(t.upper, 2);
  const SliceSpec x = descent_slice(2, 2, 1);
  EXPECT_EQ(x.scale, 2U);
  EXPECT_EQ(x.lower, 1);
  EXPECT_EQ(x.upper, 3);
  // Clipped to the cube at both ends.
  EXPECT_EQ(descent_slice(2, 3, 0).lower, 0);
  EXPECT_EQ(descent_slice(2, 3, 2).upper, 6);
}

TEST(MonteCarlo, WholeCubeIsExact) {
  for (std::uint64_t d = 1; d <= 5; ++d) {
    const VolumeEstimate v = mc_volume(SliceSpec{d, 1, 0, Rational(Integer(d))}, 1000, 3);
    EXPECT_EQ(v.estimate, Rational(factorial(d)));
    EXPECT_EQ(v.standard_error, 0);
    EXPECT_EQ(v.samples, 1000U);
    EXPECT_EQ(v.seed, 3U);
  }
}

TEST(MonteCarlo, Deterministic) {
  const SliceSpec spec = eulerian_slice(4, 2);
  const VolumeEstimate a = mc_volume(spec, 200'000, 42, 1);
  const VolumeEstimate b = mc_volume(spec, 200'000, 42, 1);
  const VolumeEstimate c = mc_volume(spec, 200'000, 42, 3);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.estimate, c.estimate);
  EXPECT_EQ(a.standard_error, c.standard_error);
  EXPECT_NE(a.estimate, mc_volume(spec, 200'000, 43).estimate);
}

TEST(MonteCarlo, HitTestIsExactOnTinyRuns) {
  // One sample from seed 5: recompute the hit by hand.
  SplitMix64 rng(5);
  const std::uint64_t u = rng.next_unit53();
  const Rational x(Integer(static_cast<unsigned long>(u)), Integer("9007199254740992"));
  const bool hit = x <= Rational(1, 3);
  const VolumeEstimate v = mc_volume(SliceSpec{1, 1, 0, Rational(1, 3)}, 1, 5);
  EXPECT_EQ(v.estimate, hit ? 1 : 0);
}

TEST(MonteCarlo, SliceVolumesNearExact) {
  const VolumeEstimate t21 = mc_volume(eulerian_slice(2, 1), 1'000'000, 1);
  EXPECT_TRUE(within(t21, 1, 4)) << t21.estimate << " +- " << t21.standard_error;
  const VolumeEstimate x221 = mc_volume(descent_slice(2, 2, 1), 1'000'000, 1);
  EXPECT_TRUE(within(x221, 6, 4)) << x221.estimate << " +- " << x221.standard_error;
  EXPECT_GT(x221.standard_error.sign(), 0);
}

TEST(MonteCarlo, StandardErrorBoundsTheExactValue) {
  // Every sample hits the whole segment, so the spread is zero.
  const VolumeEstimate v = mc_volume(SliceSpec{1, 1, 0, Rational(1)}, 4, 0);
  EXPECT_EQ(v.standard_error, 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const VolumeEstimate w = mc_volume(SliceSpec{2, 1, 0, Rational(1, 2)}, 16, seed);
    const Rational p = w.estimate / Rational(2);
    const Rational variance = p * (Rational(1) - p) / Rational(16) * Rational(4);
    EXPECT_GE(w.standard_error * w.standard_error, variance);
    EXPECT_LE(w.standard_error * w.standard_error, variance + Rational(Integer(1), Integer("1000000000000")));
  }
}

TEST(Minkowski, Examples) {
  EXPECT_EQ(minkowski_poly(1, 0), Polynomial{1});
  for (std::uint64_t d = 1; d <= 6; ++d) {
    for (std::uint64_t k = 0; k <= d; ++k) {
      const Polynomial p = minkowski_poly(d, k);
      ASSERT_LE(p.degree(), static_cast<long>(d));
      ASSERT_EQ(p(0), eulerian_spline(d, static_cast<std::int64_t>(k + 1)));
      for (std::uint64_t j = 0; j <= d; ++j) {
        ASSERT_EQ(p.coefficient(j), Rational(Integer(binomial(d, static_cast<std::int64_t>(j)) *
                                                     refined_bruteforce(d).at(k, j))));
      }
      for (std::uint64_t n = 1; n <= 4; ++n) {
        ASSERT_EQ(p(Rational(Integer(n - 1))), descent_spline(d, n, static_cast<std::int64_t>(k)));
      }
    }
  }
  EXPECT_THROW(minkowski_poly(2, 3), Error);
}

TEST(MixedVolume, Examples) {
  EXPECT_EQ(mixed_volume(1, 0, 1), 1);
  const RefinedTriangle t = refined_bruteforce(2);
  for (std::uint64_t j = 0; j <= 2; ++j) EXPECT_EQ(mixed_volume(2, 1, j), t.at(1, 2 - j));
  for (std::uint64_t d = 1; d <= 6; ++d) {
    const RefinedTriangle tri = refined_triangle_explicit(d);
    for (std::uint64_t k = 0; k <= d; ++k) {
      for (std::uint64_t j = 0; j <= d; ++j) {
        const Rational v = mixed_volume(d, k, j);
        ASSERT_TRUE(v.is_integer());
        ASSERT_EQ(v, tri.at(k, d - j));
      }
    }
  }
  EXPECT_THROW(mixed_volume(2, 1, 3), Error);
}
