#pragma once

#include <cstdint>
#include <vector>

#include "eulerspline/numcore.hpp"
#include "eulerspline/polyring.hpp"

namespace eulerspline {

/// Order d >= 1 of the cardinal B-spline B_d: support [0, d), pieces of degree d-1.
class SplineOrder {
 public:
  /// Throws Error when d == 0.
  explicit SplineOrder(std::uint64_t d);
  [[nodiscard]] std::uint64_t value() const { return d_; }
  friend bool operator==(SplineOrder a, SplineOrder b) { return a.d_ == b.d_; }

 private:
  std::uint64_t d_;
};

/// The polynomial that equals B_d on [piece_index, piece_index + 1).
struct PiecePoly {
  SplineOrder order;
  std::uint64_t piece_index;
  Polynomial poly;
};

/// B_d(x) from the alternating sum of truncated powers
///   B_d(x) = 1/(d-1)! * sum_i C(d,i) (-1)^i (x-i)_+^{d-1}.
/// Zero outside [0, d). B_1 is the indicator of [0, 1).
Rational bspline_eval_explicit(SplineOrder d, const Rational& x);

/// B_d(x) from the order recursion
///   B_r(x) = x/(r-1) B_{r-1}(x) + (r-x)/(r-1) B_{r-1}(x-1),
/// evaluated bottom-up over the shifted copies that can touch x.
Rational bspline_eval_recurrence(SplineOrder d, const Rational& x);

/// Throws IndexOutOfSupport when j >= d.
PiecePoly bspline_piece(SplineOrder d, std::uint64_t j);

/// Exact integral of B_d over [a, b]. Reversed bounds flip the sign.
Rational bspline_integrate(SplineOrder d, const Rational& a, const Rational& b);

/// B_d(x) - sum_{j=0}^{d} 2^{1-d} C(d,j) B_d(2x - j).
Rational two_scale_residual(SplineOrder d, const Rational& x);

/// sum_k B_d(x - k) - 1.
Rational partition_residual(SplineOrder d, const Rational& x);

/// For x_m = m/grid over the open support, B(x_m)^2 - B(x_m - h) B(x_m + h)
/// with h = 1/grid. Nonnegative everywhere when B_d is log-concave.
/// Requires d >= 2 and grid >= 1.
std::vector<Rational> log_concavity_witness(SplineOrder d, std::uint64_t grid_denominator);

}  // namespace eulerspline
