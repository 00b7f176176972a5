#include "eulerspline/splinecore.hpp"

#include <algorithm>

namespace eulerspline {

namespace {

bool outside_support(SplineOrder d, const Rational& x) {
  return x.sign() < 0 || x >= Rational(Integer(d.value()));
}

Rational dyadic(std::uint64_t exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, exponent);
  return Rational(Integer(1), p);
}

}  // namespace

SplineOrder::SplineOrder(std::uint64_t d) : d_(d) {
  if (d == 0) throw Error("spline order must be at least 1");
}

Rational bspline_eval_explicit(SplineOrder d, const Rational& x) {
  if (outside_support(d, x)) return 0;
  const std::uint64_t order = d.value();
  Rational sum;
  // Terms with i > x vanish: (x - i)_+ = 0.
  const std::uint64_t last = std::min<std::uint64_t>(order, to_u64(x.floor()));
  for (std::uint64_t i = 0; i <= last; ++i) {
    Rational term = Rational(binomial(order, static_cast<std::int64_t>(i))) *
                    truncated_pow(x - Rational(Integer(i)), order - 1);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / Rational(factorial(order - 1));
}

Rational bspline_eval_recurrence(SplineOrder d, const Rational& x) {
  if (outside_support(d, x)) return 0;
  const std::uint64_t order = d.value();
  // level[m] holds B_r(x - m) for m = 0..order-r; level r = 1 is the indicator.
  std::vector<Rational> level(order);
  for (std::uint64_t m = 0; m < order; ++m) {
    const Rational shifted = x - Rational(Integer(m));
    level[m] = (shifted.sign() >= 0 && shifted < Rational(1)) ? 1 : 0;
  }
  for (std::uint64_t r = 2; r <= order; ++r) {
    const Rational inv = Rational(Integer(1), Integer(r - 1));
    for (std::uint64_t m = 0; m + r <= order; ++m) {
      const Rational shifted = x - Rational(Integer(m));
      level[m] = (shifted * level[m] + (Rational(Integer(r)) - shifted) * level[m + 1]) * inv;
    }
  }
  return level[0];
}

PiecePoly bspline_piece(SplineOrder d, std::uint64_t j) {
  const std::uint64_t order = d.value();
  if (j >= order) {
    throw IndexOutOfSupport("piece " + std::to_string(j) + " outside support of B_" +
                            std::to_string(order));
  }
  Polynomial poly;
  for (std::uint64_t i = 0; i <= j; ++i) {
    Rational weight = Rational(binomial(order, static_cast<std::int64_t>(i)));
    if (i % 2 == 1) weight = -weight;
    poly += poly_pow(Polynomial({-Rational(Integer(i)), 1}), order - 1) * weight;
  }
  poly *= Rational(Integer(1), factorial(order - 1));
  return PiecePoly{d, j, std::move(poly)};
}

Rational bspline_integrate(SplineOrder d, const Rational& a, const Rational& b) {
  if (b < a) return -bspline_integrate(d, b, a);
  const Rational lo = std::max(a, Rational(0));
  const Rational hi = std::min(b, Rational(Integer(d.value())));
  if (hi <= lo) return 0;
  Rational total;
  const std::uint64_t first = to_u64(lo.floor());
  for (std::uint64_t j = first; j < d.value() && Rational(Integer(j)) < hi; ++j) {
    const Polynomial anti = bspline_piece(d, j).poly.antiderivative();
    const Rational from = std::max(lo, Rational(Integer(j)));
    const Rational to = std::min(hi, Rational(Integer(j + 1)));
    total += anti(to) - anti(from);
  }
  return total;
}

Rational two_scale_residual(SplineOrder d, const Rational& x) {
  const std::uint64_t order = d.value();
  Rational refined;
  const Rational doubled = x * Rational(2);
  for (std::uint64_t j = 0; j <= order; ++j) {
    refined += Rational(binomial(order, static_cast<std::int64_t>(j))) *
               bspline_eval_explicit(d, doubled - Rational(Integer(j)));
  }
  return bspline_eval_explicit(d, x) - refined * dyadic(order - 1);
}

Rational partition_residual(SplineOrder d, const Rational& x) {
  // Shifts k with x - k in [0, d): k in (x - d, x].
  const Integer top = x.floor();
  const Integer bottom = top - Integer(d.value()) + 1;
  Rational sum;
  for (Integer k = bottom; k <= top; ++k) sum += bspline_eval_explicit(d, x - Rational(k));
  return sum - Rational(1);
}

std::vector<Rational> log_concavity_witness(SplineOrder d, std::uint64_t grid_denominator) {
  if (d.value() < 2) throw Error("log-concavity sampling needs order >= 2");
  if (grid_denominator == 0) throw Error("grid denominator must be positive");
  const Rational step(Integer(1), Integer(grid_denominator));
  const std::uint64_t points = d.value() * grid_denominator;
  std::vector<Rational> values(points + 1);
  for (std::uint64_t m = 0; m <= points; ++m) {
    values[m] = bspline_eval_explicit(d, step * Rational(Integer(m)));
  }
  std::vector<Rational> out;
  out.reserve(points - 1);
  for (std::uint64_t m = 1; m < points; ++m) {
    out.push_back(values[m] * values[m] - values[m - 1] * values[m + 1]);
  }
  return out;
}

}  // namespace eulerspline
