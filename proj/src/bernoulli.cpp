// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <bernoulli/bernoulli.hpp>
#include <bernoulli/series.hpp>

#include <istream>
#include <ostream>
#include <string>
#include <utility>

namespace bernoulli {

namespace {

std::vector<Rational> by_recurrence(std::size_t n_max) {
  BernoulliCache cache;
  cache.extend(n_max);
  return {cache.values().begin(), cache.values().end()};
}

std::vector<Rational> by_series(std::size_t n_max) {
  const TruncatedSeries s = bernoulli_series_at(Rational(0), n_max);
  std::vector<Rational> out(n_max + 1);
  BigInt fact = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    out[n] = s[n] * Rational(fact);
  }
  return out;
}

// Akiyama-Tanigawa triangle. Row m starts from 1/(m+1) and folds to the left
// with a[j-1] = j (a[j-1] - a[j]); a[0] is then B_m under the B_1 = +1/2
// convention.
std::vector<Rational> by_akiyama_tanigawa(std::size_t n_max) {
  std::vector<Rational> row(n_max + 1);
  std::vector<Rational> out(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    row[m] = Rational(BigInt(1), BigInt(static_cast<unsigned long>(m + 1)));
    for (std::size_t j = m; j >= 1; --j) {
      row[j - 1] = Rational(static_cast<long>(j)) * (row[j - 1] - row[j]);
    }
    out[m] = row[0];
  }
  if (n_max >= 1) out[1] = -out[1];
  return out;
}

void check_invariants(const std::vector<Rational>& values) {
  if (values.empty()) return;
  if (values[0] != Rational(1)) throw CacheFormatError("B_0 must be 1");
  if (values.size() > 1 && values[1] != Rational(BigInt(-1), BigInt(2))) {
    throw CacheFormatError("B_1 must be -1/2");
  }
  for (std::size_t n = 3; n < values.size(); n += 2) {
    if (!values[n].is_zero()) {
      throw CacheFormatError("B_" + std::to_string(n) + " must be 0");
    }
  }
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
  if (name == "recurrence") return Method::recurrence;
  if (name == "series") return Method::series;
  if (name == "akiyama_tanigawa") return Method::akiyama_tanigawa;
  return std::nullopt;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::recurrence:
      return "recurrence";
    case Method::series:
      return "series";
    case Method::akiyama_tanigawa:
      return "akiyama_tanigawa";
  }
  return "unknown";
}

CacheTooShort::CacheTooShort(std::size_t needed, std::size_t available)
    : std::out_of_range("Bernoulli cache holds " + std::to_string(available) +
                        " entries, index " + std::to_string(needed) +
                        " requested"),
      needed_(needed) {}

BernoulliCache BernoulliCache::from_values(std::vector<Rational> values) {
  check_invariants(values);
  BernoulliCache cache;
  cache.values_ = std::move(values);
  return cache;
}

void BernoulliCache::extend(std::size_t new_max) {
  if (values_.size() > new_max) return;
  values_.reserve(new_max + 1);
  if (values_.empty()) values_.emplace_back(1);
  // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1
  for (std::size_t n = values_.size(); n <= new_max; ++n) {
    if (n >= 3 && n % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) {
      if (values_[k].is_zero()) continue;
      acc += Rational(binomial(n + 1, static_cast<std::int64_t>(k))) * values_[k];
    }
    values_.push_back(-acc / Rational(static_cast<long>(n + 1)));
  }
}

std::optional<std::size_t> BernoulliCache::max_index() const {
  if (values_.empty()) return std::nullopt;
  return values_.size() - 1;
}

const Rational& BernoulliCache::at(std::size_t n) const {
  if (n >= values_.size()) throw CacheTooShort(n, values_.size());
  return values_[n];
}

void BernoulliCache::require(std::size_t n) const {
  if (n >= values_.size()) throw CacheTooShort(n, values_.size());
}

BernoulliCache extend_cache(BernoulliCache cache, std::size_t new_max) {
  cache.extend(new_max);
  return cache;
}

std::vector<Rational> bernoulli_sequence(std::size_t n_max, Method method) {
  switch (method) {
    case Method::recurrence:
      return by_recurrence(n_max);
    case Method::series:
      return by_series(n_max);
    case Method::akiyama_tanigawa:
      return by_akiyama_tanigawa(n_max);
  }
  throw std::invalid_argument("unknown Bernoulli method");
}

Rational bernoulli_number(std::size_t n, Method method) {
  return bernoulli_sequence(n, method).back();
}

Polynomial bernoulli_polynomial(std::size_t n, const BernoulliCache& cache) {
  cache.require(n);
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[n - k] = Rational(binomial(n, static_cast<std::int64_t>(k))) * cache[k];
  }
  return Polynomial(std::move(c));
}

void save_cache(const BernoulliCache& cache, std::ostream& out) {
  const auto values = cache.values();
  for (std::size_t n = 0; n < values.size(); ++n) {
    out << n << '\t' << values[n].to_fraction_string() << '\n';
  }
}

BernoulliCache load_cache(std::istream& in) {
  std::vector<Rational> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (in.eof()) throw CacheFormatError(where() + "missing final newline");
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw CacheFormatError(where() + "expected `n<TAB>p/q`");
    }
    const std::string index = line.substr(0, tab);
    const std::string expected = std::to_string(values.size());
    if (index != expected) {
      throw CacheFormatError(where() + "expected index " + expected + ", found `" +
                             index + "`");
    }
    const std::string value = line.substr(tab + 1);
    const auto slash = value.find('/');
    const auto parsed = Rational::parse(value);
    if (slash == std::string::npos || !parsed ||
        parsed->to_fraction_string() != value) {
      throw CacheFormatError(where() + "value `" + value +
                             "` is not a reduced p/q fraction");
    }
    values.push_back(*parsed);
  }
  if (in.bad()) throw CacheFormatError("read error");
  return BernoulliCache::from_values(std::move(values));
}

}  // namespace bernoulli
