#include "eulerspline/polyring.hpp"

#include <algorithm>
#include <ostream>

namespace eulerspline {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({0, 1}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().sign() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::uint64_t j) const {
  return j < coeffs_.size() ? coeffs_[j] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].sign() == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_pow(const Polynomial& p, std::uint64_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

Rational coefficient(const Polynomial& p, std::uint64_t j) { return p.coefficient(j); }

Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points) {
  if (points.empty()) throw Error("interpolation needs at least one point");
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].first == points[b].first) {
        throw DuplicateNode("duplicate interpolation node " + points[a].first.to_string());
      }
    }
  }
  Polynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Lagrange basis polynomial for node i.
    Polynomial basis = Polynomial::constant(1);
    Rational scale = 1;
    for (std::size_t m = 0; m < points.size(); ++m) {
      if (m == i) continue;
      basis *= Polynomial({-points[m].first, 1});
      scale *= points[i].first - points[m].first;
    }
    result += basis * (points[i].second / scale);
  }
  return result;
}

nlohmann::json to_json(const Polynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& c = p.coeffs()[i];
    if (c.sign() == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

}  // namespace eulerspline
