#include "eulerspline/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eulerspline/polyring.hpp"
#include "eulerspline/splinecore.hpp"
#include "parallel.hpp"

namespace eulerspline {

namespace {

void require_dimension(std::uint64_t d) {
  if (d == 0) throw Error("dimension must be at least 1");
}

void require_index(std::uint64_t d, std::uint64_t k, std::uint64_t j) {
  if (k > d || j > d) {
    throw Error("refined index (k=" + std::to_string(k) + ", j=" + std::to_string(j) +
                ") outside 0.." + std::to_string(d));
  }
}

Integer to_exact_integer(const Rational& value, const char* what) {
  if (!value.is_integer()) {
    throw NonIntegerResult(std::string(what) + " produced non-integer " + value.to_string());
  }
  return value.num();
}

Integer to_nonnegative(const Rational& value, const char* what) {
  Integer out = to_exact_integer(value, what);
  if (out < 0) throw NegativeResult(std::string(what) + " produced negative " + to_string(out));
  return out;
}

std::uint64_t count_descents(const std::vector<int>& perm) {
  std::uint64_t descents = 0;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) descents += perm[i] > perm[i + 1] ? 1 : 0;
  return descents;
}

/// Visits every permutation of 1..size whose first letter is `first`.
template <typename Visit>
void for_each_with_first(int size, int first, Visit visit) {
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(size));
  perm.push_back(first);
  for (int v = 1; v <= size; ++v) {
    if (v != first) perm.push_back(v);
  }
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

}  // namespace

Integer EulerianRow::at(std::int64_t k) const {
  if (k < 1 || static_cast<std::uint64_t>(k) > values.size()) return 0;
  return values[static_cast<std::size_t>(k - 1)];
}

const Integer& RefinedTriangle::at(std::uint64_t k, std::uint64_t j) const {
  return values.at(k * (d + 1) + j);
}

Integer& RefinedTriangle::at(std::uint64_t k, std::uint64_t j) { return values.at(k * (d + 1) + j); }

Integer eulerian_spline(std::uint64_t d, std::int64_t k) {
  require_dimension(d);
  if (k <= 0 || static_cast<std::uint64_t>(k) > d) return 0;
  const Rational value =
      Rational(factorial(d)) * bspline_eval_explicit(SplineOrder(d + 1), Rational(Integer(static_cast<long>(k))));
  return to_exact_integer(value, "eulerian_spline");
}

EulerianRow eulerian_row_spline(std::uint64_t d) {
  EulerianRow row{d, {}};
  for (std::uint64_t k = 1; k <= d; ++k) row.values.push_back(eulerian_spline(d, static_cast<std::int64_t>(k)));
  return row;
}

EulerianRow eulerian_bruteforce(std::uint64_t d, const EnumerationLimits& limits) {
  require_dimension(d);
  if (d > limits.max_permutation_d) {
    throw TooLarge("eulerian brute force limited to d <= " + std::to_string(limits.max_permutation_d));
  }
  const int size = static_cast<int>(d);
  const auto histogram = detail::parallel_histogram(
      d, d, worker_count(limits), [size](std::size_t task, std::vector<std::uint64_t>& counts) {
        for_each_with_first(size, static_cast<int>(task) + 1,
                            [&counts](const std::vector<int>& perm) { ++counts[count_descents(perm)]; });
      });
  EulerianRow row{d, {}};
  for (auto c : histogram) row.values.emplace_back(static_cast<unsigned long>(c));
  return row;
}

Integer refined_explicit(std::uint64_t d, std::uint64_t k, std::uint64_t j) {
  require_index(d, k, j);
  Rational sum;
  for (std::uint64_t i = 0; i <= k; ++i) {
    const Rational base(Integer(k - i));
    Rational term = Rational(binomial(d + 1, static_cast<std::int64_t>(i))) * int_pow(base, j) *
                    int_pow(base + Rational(1), d - j);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return to_nonnegative(sum, "refined_explicit");
}

Integer refined_lambda_extraction(std::uint64_t d, std::uint64_t k, std::uint64_t j) {
  require_index(d, k, j);
  // On lambda >= 0 the argument k + 1/(lambda+1) lies in (k, k+1], where the
  // truncated powers with i <= k are active, so
  //   d! (lambda+1)^d B_{d+1}(k + 1/(lambda+1))
  //     = sum_{i<=k} C(d+1,i) (-1)^i ((lambda+1)(k-i) + 1)^d.
  Polynomial volume;
  for (std::uint64_t i = 0; i <= k; ++i) {
    const Rational gap(Integer(k - i));
    Polynomial linear({gap + Rational(1), gap});
    Rational weight = Rational(binomial(d + 1, static_cast<std::int64_t>(i)));
    if (i % 2 == 1) weight = -weight;
    volume += poly_pow(linear, d) * weight;
  }
  const Rational value = volume.coefficient(j) / Rational(binomial(d, static_cast<std::int64_t>(j)));
  return to_nonnegative(value, "refined_lambda_extraction");
}

RefinedTriangle refined_triangle_explicit(std::uint64_t d) {
  RefinedTriangle t{d, std::vector<Integer>((d + 1) * (d + 1))};
  for (std::uint64_t k = 0; k <= d; ++k) {
    for (std::uint64_t j = 0; j <= d; ++j) t.at(k, j) = refined_explicit(d, k, j);
  }
  return t;
}

RefinedTriangle refined_triangle_lambda(std::uint64_t d) {
  RefinedTriangle t{d, std::vector<Integer>((d + 1) * (d + 1))};
  for (std::uint64_t k = 0; k <= d; ++k) {
    for (std::uint64_t j = 0; j <= d; ++j) t.at(k, j) = refined_lambda_extraction(d, k, j);
  }
  return t;
}

RefinedTriangle refined_bruteforce(std::uint64_t d, const EnumerationLimits& limits) {
  require_dimension(d);
  if (d > limits.max_refined_d) {
    throw TooLarge("refined brute force limited to d <= " + std::to_string(limits.max_refined_d));
  }
  const int size = static_cast<int>(d + 1);
  const std::size_t width = d + 1;
  const auto histogram = detail::parallel_histogram(
      width, width * width, worker_count(limits),
      [size, width](std::size_t task, std::vector<std::uint64_t>& counts) {
        for_each_with_first(size, static_cast<int>(task) + 1, [&](const std::vector<int>& perm) {
          const std::size_t k = count_descents(perm);
          const std::size_t j = static_cast<std::size_t>(size - perm.back());
          ++counts[k * width + j];
        });
      });
  RefinedTriangle t{d, {}};
  for (auto c : histogram) t.values.emplace_back(static_cast<unsigned long>(c));
  return t;
}

Rational eulerian_two_scale_residual(std::uint64_t d, std::int64_t k) {
  require_dimension(d);
  Rational sum;
  for (std::uint64_t j = 0; j <= d + 1; ++j) {
    sum += Rational(binomial(d + 1, static_cast<std::int64_t>(j))) *
           Rational(eulerian_spline(d, 2 * k - static_cast<std::int64_t>(j)));
  }
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, d);
  return Rational(eulerian_spline(d, k)) - sum / Rational(power);
}

}  // namespace eulerspline
