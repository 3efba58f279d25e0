// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bernoulli/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bernoulli {

class SeriesOrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonUnitDivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formal power series c_0 + c_1 z + ... + c_N z^N, cut at an explicit order
/// N. Trailing zeros are kept: coeffs().size() is always order() + 1.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Throws std::invalid_argument if coeffs is empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// e^(a z): coefficients a^i / i!.
TruncatedSeries series_exp(const Rational& a, std::size_t order);

/// Cauchy product. Throws SeriesOrderMismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a / b by forward substitution. Throws SeriesOrderMismatch, or
/// NonUnitDivisor when b has a zero constant term.
TruncatedSeries series_div_unit(const TruncatedSeries& a,
                                const TruncatedSeries& b);

/// s(-z)
TruncatedSeries series_negate_argument(const TruncatedSeries& s);

/// z e^(zx) / (e^z - 1), whose z^n coefficient is B_n(x) / n!.
TruncatedSeries bernoulli_series_at(const Rational& x, std::size_t order);

}  // namespace bernoulli
