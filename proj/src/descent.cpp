#include "eulerspline/descent.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eulerspline/eulerian.hpp"
#include "eulerspline/splinecore.hpp"
#include "parallel.hpp"

namespace eulerspline {

namespace {

void require_shape(std::uint64_t d, std::uint64_t n) {
  if (d == 0) throw Error("dimension must be at least 1");
  if (n == 0) throw Error("index count n must be at least 1");
}

Integer power(std::uint64_t base, std::uint64_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

}  // namespace

DescentTable::DescentTable(std::uint64_t d, std::uint64_t n, std::vector<Integer> values)
    : d_(d), n_(n), values_(std::move(values)) {
  require_shape(d, n);
  if (values_.size() != d + 1) throw Error("descent table needs d + 1 values");
  std::vector<Rational> coeffs;
  coeffs.reserve(values_.size());
  for (const auto& v : values_) coeffs.emplace_back(v);
  polynomial_ = Polynomial(std::move(coeffs));
}

Integer DescentTable::at(std::int64_t k) const {
  if (k < 0 || static_cast<std::uint64_t>(k) > d_) return 0;
  return values_[static_cast<std::size_t>(k)];
}

std::uint64_t indexed_descents(const IndexedPermutation& p) {
  const std::size_t d = p.letters.size();
  std::uint64_t descents = 0;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const bool down = p.indices[i] > p.indices[i + 1] ||
                      (p.indices[i] == p.indices[i + 1] && p.letters[i] > p.letters[i + 1]);
    descents += down ? 1 : 0;
  }
  if (d > 0 && p.indices[d - 1] > 0) ++descents;
  return descents;
}

Integer descent_spline(std::uint64_t d, std::uint64_t n, std::int64_t k) {
  require_shape(d, n);
  if (k < 0 || static_cast<std::uint64_t>(k) > d) return 0;
  const Rational x = Rational(Integer(static_cast<long>(k))) + Rational(Integer(1), Integer(n));
  const Rational value =
      Rational(factorial(d)) * Rational(power(n, d)) * bspline_eval_explicit(SplineOrder(d + 1), x);
  if (!value.is_integer()) throw NonIntegerResult("descent_spline produced " + value.to_string());
  return value.num();
}

Integer descent_explicit(std::uint64_t d, std::uint64_t n, std::uint64_t k) {
  require_shape(d, n);
  if (k > d) throw Error("descent index k outside 0..d");
  Integer sum;
  for (std::uint64_t i = 0; i <= k; ++i) {
    Integer term = binomial(d + 1, static_cast<std::int64_t>(i)) * power(n * (k - i) + 1, d);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum < 0) throw NegativeResult("descent_explicit produced " + to_string(sum));
  return sum;
}

DescentTable descent_recurrence_table(std::uint64_t d, std::uint64_t n) {
  require_shape(d, n);
  std::vector<Integer> row{Integer(1), Integer(n - 1)};
  for (std::uint64_t dim = 2; dim <= d; ++dim) {
    std::vector<Integer> next(dim + 1);
    for (std::uint64_t k = 0; k <= dim; ++k) {
      Integer value;
      if (k < row.size()) value += Integer(n * k + 1) * row[k];
      if (k >= 1) value += Integer(n * (dim - k) + (n - 1)) * row[k - 1];
      next[k] = value;
    }
    row = std::move(next);
  }
  return DescentTable(d, n, std::move(row));
}

Integer descent_via_refined(std::uint64_t d, std::uint64_t n, std::uint64_t k) {
  require_shape(d, n);
  if (k > d) throw Error("descent index k outside 0..d");
  Integer sum;
  for (std::uint64_t j = 0; j <= d; ++j) {
    // (n-1)^j with 0^0 = 1.
    sum += binomial(d, static_cast<std::int64_t>(j)) * refined_explicit(d, k, j) * power(n - 1, j);
  }
  return sum;
}

DescentTable indexed_bruteforce(std::uint64_t d, std::uint64_t n, const EnumerationLimits& limits) {
  require_shape(d, n);
  const Integer total = power(n, d) * factorial(d);
  if (total > Integer(static_cast<unsigned long>(limits.indexed_budget))) {
    throw TooLarge("indexed enumeration of " + to_string(total) + " exceeds budget " +
                   std::to_string(limits.indexed_budget));
  }
  const int size = static_cast<int>(d);
  const int indices = static_cast<int>(n);
  // One task per (first letter, first index) pair.
  const std::size_t tasks = d * n;
  const auto histogram = detail::parallel_histogram(
      tasks, d + 1, worker_count(limits), [size, indices](std::size_t task, std::vector<std::uint64_t>& counts) {
        IndexedPermutation p;
        const int first_letter = static_cast<int>(task) / indices + 1;
        p.letters.push_back(first_letter);
        for (int v = 1; v <= size; ++v) {
          if (v != first_letter) p.letters.push_back(v);
        }
        do {
          p.indices.assign(static_cast<std::size_t>(size), 0);
          p.indices[0] = static_cast<int>(task) % indices;
          while (true) {
            ++counts[indexed_descents(p)];
            // Odometer over positions 1..d-1.
            int pos = size - 1;
            while (pos >= 1 && p.indices[static_cast<std::size_t>(pos)] == indices - 1) {
              p.indices[static_cast<std::size_t>(pos)] = 0;
              --pos;
            }
            if (pos < 1) break;
            ++p.indices[static_cast<std::size_t>(pos)];
          }
        } while (std::next_permutation(p.letters.begin() + 1, p.letters.end()));
      });
  std::vector<Integer> values;
  values.reserve(histogram.size());
  for (auto c : histogram) values.emplace_back(static_cast<unsigned long>(c));
  return DescentTable(d, n, std::move(values));
}

DescentRoute parse_descent_route(std::string_view name) {
  if (name == "spline") return DescentRoute::spline;
  if (name == "explicit") return DescentRoute::explicit_sum;
  if (name == "recurrence") return DescentRoute::recurrence;
  if (name == "refined") return DescentRoute::refined;
  if (name == "brute") return DescentRoute::brute;
  throw Error("unknown descent route '" + std::string(name) + "'");
}

DescentTable descent_table(std::uint64_t d, std::uint64_t n, DescentRoute route, const EnumerationLimits& limits) {
  require_shape(d, n);
  std::vector<Integer> values(d + 1);
  switch (route) {
    case DescentRoute::recurrence:
      return descent_recurrence_table(d, n);
    case DescentRoute::brute:
      return indexed_bruteforce(d, n, limits);
    case DescentRoute::spline:
      for (std::uint64_t k = 0; k <= d; ++k) values[k] = descent_spline(d, n, static_cast<std::int64_t>(k));
      break;
    case DescentRoute::explicit_sum:
      for (std::uint64_t k = 0; k <= d; ++k) values[k] = descent_explicit(d, n, k);
      break;
    case DescentRoute::refined:
      for (std::uint64_t k = 0; k <= d; ++k) values[k] = descent_via_refined(d, n, k);
      break;
  }
  return DescentTable(d, n, std::move(values));
}

std::vector<Rational> log_concavity_verdict(const DescentTable& table) {
  std::vector<Rational> out;
  const auto& v = table.values();
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    out.emplace_back(Integer(v[k] * v[k] - v[k - 1] * v[k + 1]));
  }
  return out;
}

Rational descent_two_scale_residual(std::uint64_t d, std::uint64_t n, std::int64_t k) {
  require_shape(d, n);
  Integer sum;
  for (std::uint64_t j = 0; j <= d + 1; ++j) {
    sum += binomial(d + 1, static_cast<std::int64_t>(j)) * descent_spline(d, n, 2 * k - static_cast<std::int64_t>(j));
  }
  return Rational(Integer(descent_spline(d, 2 * n, k) - sum));
}

}  // namespace eulerspline
