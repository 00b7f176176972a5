#include "eulerspline/numcore.hpp"

#include <ostream>

namespace eulerspline {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!is_decimal(num_part) || !is_decimal(den_part)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer num(std::string(num_part), 10);
  Integer den(std::string(den_part), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw NonIntegerResult("expected an integer, got " + to_string());
  return num();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error("division by zero");
  value_ /= o.value_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
  return result;
}

Integer factorial(std::uint64_t n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Rational int_pow(const Rational& x, std::uint64_t e) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), e);
  return Rational(num, den);
}

Rational truncated_pow(const Rational& x, std::uint64_t e) {
  const int s = x.sign();
  if (s < 0) return 0;
  if (s == 0) return e == 0 ? 1 : 0;
  return int_pow(x, e);
}

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw Error("integer " + value.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

}  // namespace eulerspline
