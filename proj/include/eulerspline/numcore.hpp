#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eulerspline {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateNode : public Error {
 public:
  using Error::Error;
};

class IndexOutOfSupport : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be an integer reduced to a proper fraction.
/// Never caused by valid input; it means one of the exact routes is wrong.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class NegativeResult : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured bound.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Exact rational number, always kept in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws Error when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" or "p" with decimal digits and an optional leading '-'.
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer num() const { return value_.get_num(); }
  [[nodiscard]] Integer den() const { return value_.get_den(); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  /// Throws NonIntegerResult unless the denominator is 1.
  [[nodiscard]] Integer to_integer() const;
  /// Canonical "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws Error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Largest integer not exceeding this value.
  [[nodiscard]] Integer floor() const;
  /// Smallest integer not less than this value.
  [[nodiscard]] Integer ceil() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Decimal rendering of an integer.
std::string to_string(const Integer& value);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(std::uint64_t n, std::int64_t k);

Integer factorial(std::uint64_t n);

/// x^e with 0^0 = 1.
Rational int_pow(const Rational& x, std::uint64_t e);

/// Truncated power (x)_+^e: x^e for x > 0, zero for x < 0. At x = 0 the
/// result is 0 for e >= 1 and 1 for e = 0, so the order-one case is the
/// right-continuous indicator of [0, inf).
Rational truncated_pow(const Rational& x, std::uint64_t e);

/// Converts a value that fits into an unsigned 64-bit integer.
std::uint64_t to_u64(const Integer& value);

}  // namespace eulerspline
