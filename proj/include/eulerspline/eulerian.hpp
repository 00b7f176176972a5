#pragma once

#include <cstdint>
#include <vector>

#include "eulerspline/enumerate.hpp"
#include "eulerspline/numcore.hpp"

namespace eulerspline {

/// A_{d,k} for k = 1..d: permutations of S_d with exactly k-1 descents.
struct EulerianRow {
  std::uint64_t d = 0;
  /// values[k - 1] = A_{d,k}.
  std::vector<Integer> values;

  /// A_{d,k}, zero outside 1..d.
  [[nodiscard]] Integer at(std::int64_t k) const;
};

/// Refined Eulerian numbers keyed by (k, j), each in 0..d, holding the number
/// of permutations of S_{d+1} with k descents that end with d + 1 - j.
struct RefinedTriangle {
  std::uint64_t d = 0;
  /// Row-major (d+1) x (d+1), index k * (d+1) + j.
  std::vector<Integer> values;

  [[nodiscard]] const Integer& at(std::uint64_t k, std::uint64_t j) const;
  Integer& at(std::uint64_t k, std::uint64_t j);
};

/// d! * B_{d+1}(k); zero for k <= 0 or k > d. Requires d >= 1.
Integer eulerian_spline(std::uint64_t d, std::int64_t k);
EulerianRow eulerian_row_spline(std::uint64_t d);

/// Histogram of descents over all of S_d. Throws TooLarge past the limit.
EulerianRow eulerian_bruteforce(std::uint64_t d, const EnumerationLimits& limits = {});

/// Alternating sum sum_{i<=k} C(d+1,i) (-1)^i (k-i)^j (k-i+1)^{d-j}.
Integer refined_explicit(std::uint64_t d, std::uint64_t k, std::uint64_t j);

/// d! [lambda^j] ((lambda+1)^d B_{d+1}(k + 1/(lambda+1))) / C(d,j), with the
/// lambda-polynomial expanded exactly on the active spline piece.
Integer refined_lambda_extraction(std::uint64_t d, std::uint64_t k, std::uint64_t j);

RefinedTriangle refined_triangle_explicit(std::uint64_t d);
RefinedTriangle refined_triangle_lambda(std::uint64_t d);
/// Enumerates S_{d+1}. Throws TooLarge past the limit.
RefinedTriangle refined_bruteforce(std::uint64_t d, const EnumerationLimits& limits = {});

/// A_{d,k} - 2^{-d} sum_{j=0}^{d+1} C(d+1,j) A_{d,2k-j}, out-of-range A = 0.
Rational eulerian_two_scale_residual(std::uint64_t d, std::int64_t k);

}  // namespace eulerspline
