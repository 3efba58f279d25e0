// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bernoulli/bernoulli.hpp>
#include <bernoulli/polynomial.hpp>
#include <bernoulli/rational.hpp>

#include <cstdint>

namespace bernoulli {

/// (m, n, q) of the generalized identity.
struct IdentityParams {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;

  friend auto operator<=>(const IdentityParams&, const IdentityParams&) = default;
};

enum class Parity { even, odd };

inline Parity parity_of(std::uint64_t v) { return v % 2 == 0 ? Parity::even : Parity::odd; }

/// The linear form x^i -> B_i. Throws CacheTooShort when the cache does not
/// reach deg(p).
Rational apply_L(const Polynomial& p, const BernoulliCache& cache);

/// P(x) = (-1)^(m+q) x^(n+q) (1+x)^(m+q) - (-1)^n x^(m+q) (1+x)^(n+q)
Polynomial build_P(const IdentityParams& params);

/// p(-1/2 + x) + (-1)^q p(-1/2 - x), where q has the given parity.
Polynomial antisymmetry_residual(const Polynomial& p, Parity q_parity);

/// True iff p has only odd powers of (x + 1/2). The zero polynomial is odd.
bool is_odd_in_shifted(const Polynomial& p);

/// (-1)^m sum_{k=0}^{m+q} C(m+q,k) C(n+q+k,q) x^(n+k)
///   - (-1)^(n+q) sum_{k=0}^{n+q} C(n+q,k) C(m+q+k,q) x^(m+k)
///
/// Equal to (-1)^q P^(q)(x) / q!. Applying L to it gives the left-hand side
/// of the generalized identity term for term.
Polynomial closed_form_expansion(const IdentityParams& params);

/// Every intermediate object of the oddness argument for one (m, n, q).
struct ProofTrace {
  IdentityParams params;
  Polynomial p;
  /// P(-1/2 + x) + (-1)^q P(-1/2 - x)
  Polynomial antisymmetry_residual;
  /// P^(q)
  Polynomial pq;
  /// P^(q)(-1/2 + x) + P^(q)(-1/2 - x)
  Polynomial pq_antisymmetry_residual;
  bool odd_in_shifted = false;
  /// q! * closed_form_expansion == (-1)^q * P^(q)
  bool expansion_match = false;
  /// L(P^(q))
  Rational l_value;

  /// P vanishes identically (m = n with q even).
  bool degenerate() const { return p.is_zero(); }
  bool holds() const {
    return antisymmetry_residual.is_zero() && pq_antisymmetry_residual.is_zero() &&
           odd_in_shifted && expansion_match && l_value.is_zero();
  }
};

/// Records every step without asserting any of them. Throws CacheTooShort
/// when the cache does not reach deg(P^(q)) = m + n + q.
ProofTrace replay_proof(const IdentityParams& params, const BernoulliCache& cache);

}  // namespace bernoulli
