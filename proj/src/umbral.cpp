// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <bernoulli/umbral.hpp>

#include <cstddef>

namespace bernoulli {

namespace {

const Rational kMinusHalf(BigInt(-1), BigInt(2));

Rational sign_power(std::uint64_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// x^a (1+x)^b
Polynomial power_product(std::size_t a, std::size_t b) {
  return Polynomial::monomial(a) * Polynomial::shifted_power(1, b);
}

}  // namespace

Rational apply_L(const Polynomial& p, const BernoulliCache& cache) {
  if (p.is_zero()) return {};
  cache.require(static_cast<std::size_t>(p.degree()));
  Rational acc;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) acc += c[i] * cache[i];
  }
  return acc;
}

Polynomial build_P(const IdentityParams& params) {
  const std::uint64_t m = params.m, n = params.n, q = params.q;
  return sign_power(m + q) * power_product(n + q, m + q) -
         sign_power(n) * power_product(m + q, n + q);
}

Polynomial antisymmetry_residual(const Polynomial& p, Parity q_parity) {
  const Polynomial left = poly_compose_affine(p, 1, kMinusHalf);
  const Polynomial right = poly_compose_affine(p, -1, kMinusHalf);
  return q_parity == Parity::even ? left + right : left - right;
}

bool is_odd_in_shifted(const Polynomial& p) {
  const auto d = poly_rebase(p, Rational(BigInt(1), BigInt(2)));
  for (std::size_t i = 0; i < d.size(); i += 2) {
    if (!d[i].is_zero()) return false;
  }
  return true;
}

Polynomial closed_form_expansion(const IdentityParams& params) {
  const std::uint64_t m = params.m, n = params.n, q = params.q;
  std::vector<Rational> c(m + n + q + 1);
  const Rational first_sign = sign_power(m);
  for (std::uint64_t k = 0; k <= m + q; ++k) {
    c[n + k] += first_sign * Rational(binomial(m + q, static_cast<std::int64_t>(k)) *
                                      binomial(n + q + k, static_cast<std::int64_t>(q)));
  }
  const Rational second_sign = sign_power(n + q);
  for (std::uint64_t k = 0; k <= n + q; ++k) {
    c[m + k] -= second_sign * Rational(binomial(n + q, static_cast<std::int64_t>(k)) *
                                       binomial(m + q + k, static_cast<std::int64_t>(q)));
  }
  return Polynomial(std::move(c));
}

ProofTrace replay_proof(const IdentityParams& params, const BernoulliCache& cache) {
  cache.require(static_cast<std::size_t>(params.m) + params.n + params.q);
  ProofTrace t;
  t.params = params;
  t.p = build_P(params);
  t.antisymmetry_residual = antisymmetry_residual(t.p, parity_of(params.q));
  t.pq = poly_derivative(t.p, params.q);
  t.pq_antisymmetry_residual = antisymmetry_residual(t.pq, Parity::even);
  t.odd_in_shifted = is_odd_in_shifted(t.pq);
  const Polynomial scaled =
      Rational(factorial(params.q)) * closed_form_expansion(params);
  t.expansion_match = scaled == sign_power(params.q) * t.pq;
  t.l_value = apply_L(t.pq, cache);
  return t;
}

}  // namespace bernoulli
