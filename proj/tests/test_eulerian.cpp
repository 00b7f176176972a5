#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "eulerspline/eulerian.hpp"

using namespace eulerspline;

namespace {

// Single-threaded direct count, kept separate from the library enumerator.
std::vector<long> count_by_descents(int d) {
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<long> counts(static_cast<std::size_t>(d), 0);
  do {
    int des = 0;
    for (int i = 0; i + 1 < d; ++i) des += perm[i] > perm[i + 1];
    ++counts[static_cast<std::size_t>(des)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

}  // namespace

TEST(EulerianSpline, SmallValues) {
  EXPECT_EQ(eulerian_spline(2, 1), 1);
  EXPECT_EQ(eulerian_spline(3, 2), 4);
  EXPECT_EQ(eulerian_spline(3, 0), 0);
  EXPECT_EQ(eulerian_spline(3, 4), 0);
  EXPECT_EQ(eulerian_spline(3, -7), 0);
  EXPECT_THROW(eulerian_spline(0, 1), Error);
}

TEST(EulerianSpline, MatchesEnumerationOfS8) {
  const auto counts = count_by_descents(8);
  EXPECT_EQ(counts[3], 15619);
  EXPECT_EQ(eulerian_spline(8, 4), counts[3]);
}

TEST(EulerianBruteforce, Rows) {
  EXPECT_EQ(eulerian_bruteforce(1).values, std::vector<Integer>{1});
  EXPECT_EQ(eulerian_bruteforce(2).values, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(eulerian_bruteforce(4).values, (std::vector<Integer>{1, 11, 11, 1}));
  EnumerationLimits limits;
  limits.max_permutation_d = 5;
  EXPECT_THROW(eulerian_bruteforce(6, limits), TooLarge);
}

TEST(EulerianBruteforce, ThreadCountDoesNotMatter) {
  EnumerationLimits one;
  one.threads = 1;
  EnumerationLimits four;
  four.threads = 4;
  EXPECT_EQ(eulerian_bruteforce(7, one).values, eulerian_bruteforce(7, four).values);
}

TEST(Eulerian, RoutesAgree) {
  for (std::uint64_t d = 1; d <= 8; ++d) {
    const auto counts = count_by_descents(static_cast<int>(d));
    const EulerianRow brute = eulerian_bruteforce(d);
    for (std::uint64_t k = 1; k <= d; ++k) {
      ASSERT_EQ(brute.at(static_cast<std::int64_t>(k)), counts[k - 1]);
      ASSERT_EQ(eulerian_spline(d, static_cast<std::int64_t>(k)), brute.at(static_cast<std::int64_t>(k)));
    }
  }
}

TEST(Eulerian, RowInvariants) {
  for (std::uint64_t d = 1; d <= 12; ++d) {
    const EulerianRow row = eulerian_row_spline(d);
    Integer sum;
    for (std::uint64_t k = 1; k <= d; ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      sum += row.at(kk);
      ASSERT_GE(row.at(kk), 1);
      ASSERT_EQ(row.at(kk), row.at(static_cast<std::int64_t>(d + 1) - kk));
    }
    ASSERT_EQ(sum, factorial(d));
  }
}

TEST(RefinedExplicit, OrderTwo) {
  EXPECT_EQ(refined_explicit(1, 0, 0), 1);
  EXPECT_EQ(refined_explicit(1, 1, 1), 1);
  EXPECT_EQ(refined_explicit(1, 1, 0), 0);
  EXPECT_EQ(refined_explicit(1, 0, 1), 0);
  EXPECT_THROW(refined_explicit(2, 3, 0), Error);
}

TEST(RefinedLambda, Examples) {
  for (std::uint64_t k = 0; k <= 1; ++k) {
    for (std::uint64_t j = 0; j <= 1; ++j) EXPECT_EQ(refined_lambda_extraction(1, k, j), refined_explicit(1, k, j));
  }
  // S_3 with one descent ending in 2: 132 and 312.
  EXPECT_EQ(refined_lambda_extraction(2, 1, 1), 2);
  EXPECT_EQ(refined_bruteforce(2).at(1, 1), 2);
}

TEST(RefinedBruteforce, OrderTwoTriangle) {
  const RefinedTriangle t = refined_bruteforce(1);
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(1, 1), 1);
  EXPECT_EQ(t.at(0, 1), 0);
  EXPECT_EQ(t.at(1, 0), 0);
  EnumerationLimits limits;
  limits.max_refined_d = 3;
  EXPECT_THROW(refined_bruteforce(4, limits), TooLarge);
}

TEST(Refined, TriangleSums) {
  for (std::uint64_t d = 1; d <= 7; ++d) {
    const RefinedTriangle t = refined_bruteforce(d);
    Integer total;
    for (std::uint64_t j = 0; j <= d; ++j) {
      Integer column;
      for (std::uint64_t k = 0; k <= d; ++k) column += t.at(k, j);
      ASSERT_EQ(column, factorial(d));
      total += column;
    }
    ASSERT_EQ(total, factorial(d + 1));
  }
}

TEST(Refined, ThreeRoutesAgree) {
  for (std::uint64_t d = 1; d <= 7; ++d) {
    const RefinedTriangle brute = refined_bruteforce(d);
    const RefinedTriangle expl = refined_triangle_explicit(d);
    const RefinedTriangle lambda = refined_triangle_lambda(d);
    ASSERT_EQ(expl.values, brute.values) << d;
    ASSERT_EQ(lambda.values, brute.values) << d;
  }
}

TEST(Refined, LastLetterLargestIsEulerian) {
  // Ending in d+1 (j = 0) leaves an arbitrary permutation of S_d in front.
  for (std::uint64_t d = 1; d <= 10; ++d) {
    for (std::uint64_t k = 0; k < d; ++k) {
      ASSERT_EQ(refined_explicit(d, k, 0), eulerian_spline(d, static_cast<std::int64_t>(k + 1)));
    }
  }
}

TEST(EulerianTwoScale, Residuals) {
  EXPECT_EQ(eulerian_two_scale_residual(2, 1), 0);
  EXPECT_EQ(eulerian_two_scale_residual(1, 1), 0);
  for (std::uint64_t d = 1; d <= 12; ++d) {
    for (std::int64_t k = -2; k <= static_cast<std::int64_t>(d) + 2; ++k) {
      ASSERT_EQ(eulerian_two_scale_residual(d, k), 0) << d << "," << k;
    }
  }
}
