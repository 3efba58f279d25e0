// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bernoulli/bernoulli.hpp>
#include <bernoulli/rational.hpp>
#include <bernoulli/umbral.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bernoulli {

// Residuals here are direct sums over cached Bernoulli numbers. They share no
// code with the polynomial route in umbral.hpp.

/// (-1)^m sum_{k<=m} C(m,k) B_(n+k) - (-1)^n sum_{k<=n} C(n,k) B_(m+k).
/// Throws CacheTooShort unless the cache reaches m + n.
Rational carlitz_residual(std::uint32_t m, std::uint32_t n, const BernoulliCache& cache);

/// The two sums of the generalized identity before they are combined.
struct GeneralizedTerms {
  /// sum_{k<=m+q} C(m+q,k) C(n+q+k,q) B_(n+k)
  Rational first;
  /// sum_{k<=n+q} C(n+q,k) C(m+q+k,q) B_(m+k)
  Rational second;
};

GeneralizedTerms generalized_terms(const IdentityParams& params,
                                   const BernoulliCache& cache);

/// (-1)^m first - (-1)^(n+q) second. Throws CacheTooShort unless the cache
/// reaches m + n + q.
Rational generalized_residual(const IdentityParams& params, const BernoulliCache& cache);

/// Named instances of the generalized identity.
enum class SpecialCase { carlitz, momiyama, kaneko_seidel, chen_sun, zekiri_bencherif };

std::optional<SpecialCase> parse_special_case(std::string_view name);
std::string_view special_case_name(SpecialCase which);

/// Thrown when free parameters do not fit the named case.
class InvalidBinding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Free parameters of a special case. Unused fields must stay unset.
///   carlitz, momiyama: m, n
///   kaneko_seidel, chen_sun: n
///   zekiri_bencherif: n, q (odd)
struct FreeParams {
  std::optional<std::uint32_t> m = std::nullopt;
  std::optional<std::uint32_t> n = std::nullopt;
  std::optional<std::uint32_t> q = std::nullopt;
};

/// Maps a special case onto (m, n, q). Throws InvalidBinding.
IdentityParams bind_special_case(SpecialCase which, const FreeParams& free);

Rational special_case(SpecialCase which, const FreeParams& free,
                      const BernoulliCache& cache);

/// Everything `verify_grid` knows how to check.
enum class IdentityKind {
  carlitz,
  generalized,
  momiyama,
  kaneko_seidel,
  chen_sun,
  zekiri_bencherif,
};

std::optional<IdentityKind> parse_identity(std::string_view name);
std::string_view identity_name(IdentityKind kind);

struct GridRange {
  std::uint32_t m_max = 0;
  std::uint32_t n_max = 0;
  std::uint32_t q_max = 0;
};

struct GridFailure {
  IdentityParams params;
  Rational residual;
};

struct IdentityReport {
  std::string identity_name;
  /// Human-readable summary of the ranges actually iterated.
  std::string grid;
  std::uint64_t checked = 0;
  std::vector<GridFailure> failures;
  bool all_zero = true;
};

/// The (m, n, q) points visited for an identity, in lexicographic order.
/// Axes an identity does not use are pinned (q = 0 for carlitz, m = n for the
/// diagonal cases, q = 1 or 3 where fixed, odd q only for zekiri_bencherif).
std::vector<IdentityParams> grid_points(IdentityKind kind, const GridRange& range);

/// Largest Bernoulli index the grid touches.
std::size_t grid_max_index(IdentityKind kind, const GridRange& range);

/// Evaluates the residual at every grid point. The cache must already reach
/// grid_max_index. With threads > 1 the points are split across workers; the
/// report is identical either way.
IdentityReport verify_grid(IdentityKind kind, const GridRange& range,
                           const BernoulliCache& cache, unsigned threads = 1);

}  // namespace bernoulli
