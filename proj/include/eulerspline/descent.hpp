#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "eulerspline/enumerate.hpp"
#include "eulerspline/numcore.hpp"
#include "eulerspline/polyring.hpp"

namespace eulerspline {

/// D(d,n,k) for k = 0..d together with the descent polynomial
/// sum_k D(d,n,k) t^k. Both views are built from the same values.
class DescentTable {
 public:
  /// Requires d >= 1, n >= 1 and values.size() == d + 1.
  DescentTable(std::uint64_t d, std::uint64_t n, std::vector<Integer> values);

  [[nodiscard]] std::uint64_t d() const { return d_; }
  [[nodiscard]] std::uint64_t n() const { return n_; }
  [[nodiscard]] const std::vector<Integer>& values() const { return values_; }
  [[nodiscard]] const Polynomial& polynomial() const { return polynomial_; }
  /// D(d,n,k), zero outside 0..d.
  [[nodiscard]] Integer at(std::int64_t k) const;

  friend bool operator==(const DescentTable& a, const DescentTable& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  std::uint64_t d_;
  std::uint64_t n_;
  std::vector<Integer> values_;
  Polynomial polynomial_;
};

/// A permutation of 1..d with an index in 0..n-1 attached to every letter.
struct IndexedPermutation {
  std::vector<int> letters;
  std::vector<int> indices;
};

/// Descents of an indexed permutation. Position i < d is a descent when
/// e_i > e_{i+1}, or e_i == e_{i+1} and pi_i > pi_{i+1}; position d is a
/// descent when e_d > 0.
std::uint64_t indexed_descents(const IndexedPermutation& p);

/// d! n^d B_{d+1}(k + 1/n); zero for k < 0 or k > d.
Integer descent_spline(std::uint64_t d, std::uint64_t n, std::int64_t k);

/// sum_{i<=k} C(d+1,i) (-1)^i (n(k-i) + 1)^d.
Integer descent_explicit(std::uint64_t d, std::uint64_t n, std::uint64_t k);

/// Builds rows 1..d of
///   D(d,n,k) = (nk+1) D(d-1,n,k) + (n(d-k) + n-1) D(d-1,n,k-1)
/// from the row D(1,n,.) = (1, n-1).
DescentTable descent_recurrence_table(std::uint64_t d, std::uint64_t n);

/// sum_j C(d,j) A_{d+1,k,d+1-j} (n-1)^j over refined Eulerian numbers.
Integer descent_via_refined(std::uint64_t d, std::uint64_t n, std::uint64_t k);

/// Descent histogram over all n^d d! indexed permutations.
/// Throws TooLarge when that count exceeds limits.indexed_budget.
DescentTable indexed_bruteforce(std::uint64_t d, std::uint64_t n, const EnumerationLimits& limits = {});

enum class DescentRoute { spline, explicit_sum, recurrence, refined, brute };

/// Parses "spline", "explicit", "recurrence", "refined" or "brute".
DescentRoute parse_descent_route(std::string_view name);

DescentTable descent_table(std::uint64_t d, std::uint64_t n, DescentRoute route,
                           const EnumerationLimits& limits = {});

/// values[k]^2 - values[k-1] values[k+1] for k = 1..d-1.
std::vector<Rational> log_concavity_verdict(const DescentTable& table);

/// D(d,2n,k) - sum_{j=0}^{d+1} C(d+1,j) D(d,n,2k-j), out-of-range D = 0.
Rational descent_two_scale_residual(std::uint64_t d, std::uint64_t n, std::int64_t k);

}  // namespace eulerspline
