// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <bernoulli/rational.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bernoulli {

namespace {

// Optional leading '-', then at least one digit, nothing else.
bool is_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num, true)) return std::nullopt;
  BigInt n(std::string(num), 10);
  if (slash == std::string_view::npos) return Rational(n);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den, false)) return std::nullopt;
  BigInt d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  const std::uint64_t kk = std::min<std::uint64_t>(k, n - k);
  BigInt result = 1;
  // After step i the accumulator is C(n - kk + i, i), so each division is exact.
  for (std::uint64_t i = 1; i <= kk; ++i) {
    result *= static_cast<unsigned long>(n - kk + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= static_cast<unsigned long>(i);
  return result;
}

}  // namespace bernoulli
