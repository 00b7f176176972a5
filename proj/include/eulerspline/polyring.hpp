#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eulerspline/numcore.hpp"

namespace eulerspline {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[i] is the coefficient of the i-th power; the highest stored
/// coefficient is never zero, and the zero polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// The indeterminate t.
  static Polynomial identity();

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// [t^j] of this polynomial, zero beyond the degree.
  [[nodiscard]] Rational coefficient(std::uint64_t j) const;
  /// Horner evaluation.
  [[nodiscard]] Rational operator()(const Rational& x) const;
  /// Antiderivative with zero constant term.
  [[nodiscard]] Polynomial antiderivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
/// p^e by repeated squaring; p^0 = 1.
Polynomial poly_pow(const Polynomial& p, std::uint64_t e);
Rational poly_eval(const Polynomial& p, const Rational& x);
Rational coefficient(const Polynomial& p, std::uint64_t j);

/// Lagrange interpolation through (x, y) pairs with distinct abscissae.
/// Throws DuplicateNode on a repeated abscissa and Error on empty input.
Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Array of canonical coefficient strings, ascending powers.
nlohmann::json to_json(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace eulerspline
