// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <bernoulli/polynomial.hpp>

#include <ostream>
#include <sstream>
#include <utility>

namespace bernoulli {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t power, const Rational& c) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_power(const Rational& shift, std::size_t power) {
  std::vector<Rational> v(power + 1);
  Rational shift_pow = 1;
  for (std::size_t j = 0; j <= power; ++j) {
    // coefficient of x^(power - j) is C(power, j) * shift^j
    v[power - j] = Rational(binomial(power, static_cast<std::int64_t>(j))) *
                   shift_pow;
    shift_pow *= shift;
  }
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != Rational(1)) out << mag << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
Polynomial operator*(Polynomial p, const Rational& scalar) { return p *= scalar; }
Polynomial operator*(const Rational& scalar, Polynomial p) { return p *= scalar; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Rational> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return Polynomial(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial poly_pow(const Polynomial& base, std::size_t exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial sq = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * sq;
    exponent >>= 1U;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

Polynomial poly_derivative(const Polynomial& p, std::size_t q) {
  const auto& c = p.coeffs();
  if (q == 0) return p;
  if (q >= c.size()) return {};
  std::vector<Rational> out(c.size() - q);
  for (std::size_t i = q; i < c.size(); ++i) {
    // falling factorial i (i-1) ... (i-q+1)
    BigInt ff = 1;
    for (std::size_t j = 0; j < q; ++j) ff *= static_cast<unsigned long>(i - j);
    out[i - q] = c[i] * Rational(ff);
  }
  return Polynomial(std::move(out));
}

Polynomial poly_compose_affine(const Polynomial& p, const Rational& a,
                               const Rational& b) {
  const Polynomial inner({b, a});
  Polynomial result;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    result = result * inner + Polynomial::constant(*it);
  }
  return result;
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> poly_rebase(const Polynomial& p, const Rational& c) {
  return poly_compose_affine(p, 1, -c).coeffs();
}

}  // namespace bernoulli
