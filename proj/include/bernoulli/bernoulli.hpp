// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bernoulli/polynomial.hpp>
#include <bernoulli/rational.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace bernoulli {

// Convention throughout: B_1 = -1/2, i.e. the coefficients of z/(e^z - 1).

enum class Method { recurrence, series, akiyama_tanigawa };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method method);

/// Thrown when a lookup needs an index beyond what a cache holds.
class CacheTooShort : public std::out_of_range {
 public:
  CacheTooShort(std::size_t needed, std::size_t available);
  std::size_t needed() const { return needed_; }

 private:
  std::size_t needed_;
};

/// Thrown by the cache loader and BernoulliCache::from_values.
class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Append-only table of B_0..B_max.
///
/// Populate it to the largest index needed in one writer, then share it
/// read-only; const member functions are safe to call concurrently.
class BernoulliCache {
 public:
  BernoulliCache() = default;

  /// Adopts a precomputed table after checking B_0 = 1, B_1 = -1/2 and
  /// B_odd = 0 for odd indices >= 3. Throws CacheFormatError otherwise.
  static BernoulliCache from_values(std::vector<Rational> values);

  /// Populates every entry up to new_max with the defining recurrence.
  /// Existing entries are not recomputed.
  void extend(std::size_t new_max);

  bool empty() const { return values_.empty(); }
  /// Number of populated entries (max_index + 1).
  std::size_t size() const { return values_.size(); }
  /// nullopt when empty.
  std::optional<std::size_t> max_index() const;

  /// Throws CacheTooShort.
  const Rational& at(std::size_t n) const;
  const Rational& operator[](std::size_t n) const { return values_[n]; }
  /// Throws CacheTooShort unless indices 0..n are present.
  void require(std::size_t n) const;

  std::span<const Rational> values() const { return values_; }

  friend bool operator==(const BernoulliCache&, const BernoulliCache&) = default;

 private:
  std::vector<Rational> values_;
};

/// Functional form of BernoulliCache::extend.
BernoulliCache extend_cache(BernoulliCache cache, std::size_t new_max);

/// B_n computed from scratch by the chosen algorithm.
Rational bernoulli_number(std::size_t n, Method method);

/// B_0..B_n_max computed from scratch by the chosen algorithm.
std::vector<Rational> bernoulli_sequence(std::size_t n_max, Method method);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k). Throws CacheTooShort.
Polynomial bernoulli_polynomial(std::size_t n, const BernoulliCache& cache);

// Persistence: one `n<TAB>p/q<LF>` record per entry, ascending, no gaps.
void save_cache(const BernoulliCache& cache, std::ostream& out);
/// Throws CacheFormatError on malformed, gapped or invariant-violating input.
BernoulliCache load_cache(std::istream& in);

}  // namespace bernoulli
