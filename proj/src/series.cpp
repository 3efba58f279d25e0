// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <bernoulli/series.hpp>

#include <string>
#include <utility>

namespace bernoulli {

namespace {

void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw SeriesOrderMismatch("series order mismatch: " +
                              std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("truncated series needs at least one coefficient");
  }
}

TruncatedSeries series_exp(const Rational& a, std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t i = 1; i <= order; ++i) {
    c[i] = c[i - 1] * a / Rational(static_cast<long>(i));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_orders(a, b);
  const std::size_t n = a.order();
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_div_unit(const TruncatedSeries& a,
                                const TruncatedSeries& b) {
  check_orders(a, b);
  if (b[0].is_zero()) {
    throw NonUnitDivisor("series divisor has zero constant term");
  }
  const std::size_t n = a.order();
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= b[j] * c[i - j];
    c[i] = acc / b[0];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_negate_argument(const TruncatedSeries& s) {
  std::vector<Rational> c = s.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries bernoulli_series_at(const Rational& x, std::size_t order) {
  // (e^z - 1)/z = sum z^i / (i+1)!, a unit, so the quotient never meets the
  // removable singularity at z = 0.
  std::vector<Rational> unit(order + 1);
  BigInt fact = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    fact *= static_cast<unsigned long>(i + 1);
    unit[i] = Rational(BigInt(1), fact);
  }
  return series_div_unit(series_exp(x, order), TruncatedSeries(std::move(unit)));
}

}  // namespace bernoulli
