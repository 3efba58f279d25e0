// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bernoulli/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace bernoulli {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs)
      : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  /// c * x^power
  static Polynomial monomial(std::size_t power, const Rational& c = 1);
  /// (x + shift)^power, expanded.
  static Polynomial shifted_power(const Rational& shift, std::size_t power);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;

  /// Ascending sparse form `c0 + c1*x + c2*x^2`, zero terms omitted, "0" for
  /// the zero polynomial.
  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial p, const Rational& scalar);
Polynomial operator*(const Rational& scalar, Polynomial p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& base, std::size_t exponent);

/// q-th formal derivative. q = 0 is the identity.
Polynomial poly_derivative(const Polynomial& p, std::size_t q);

/// p(a*x + b)
Polynomial poly_compose_affine(const Polynomial& p, const Rational& a,
                               const Rational& b);

/// Horner evaluation, exact.
Rational poly_eval(const Polynomial& p, const Rational& x);

/// Coefficients d with p(x) = sum_i d_i (x + c)^i. Empty for p = 0.
std::vector<Rational> poly_rebase(const Polynomial& p, const Rational& c);

}  // namespace bernoulli
