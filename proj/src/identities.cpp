// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <bernoulli/identities.hpp>

#include <algorithm>
#include <cstddef>
#include <thread>

namespace bernoulli {

namespace {

Rational sign_power(std::uint64_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational binom(std::uint64_t n, std::uint64_t k) {
  return Rational(binomial(n, static_cast<std::int64_t>(k)));
}

std::string range_text(std::uint32_t hi) { return "0.." + std::to_string(hi); }

void require_absent(const std::optional<std::uint32_t>& v, const char* field,
                    SpecialCase which) {
  if (v) {
    throw InvalidBinding(std::string(special_case_name(which)) + " does not take " +
                         field);
  }
}

std::uint32_t require_present(const std::optional<std::uint32_t>& v, const char* field,
                              SpecialCase which) {
  if (!v) {
    throw InvalidBinding(std::string(special_case_name(which)) + " requires " + field);
  }
  return *v;
}

}  // namespace

Rational carlitz_residual(std::uint32_t m, std::uint32_t n, const BernoulliCache& cache) {
  cache.require(static_cast<std::size_t>(m) + n);
  Rational first;
  for (std::uint64_t k = 0; k <= m; ++k) first += binom(m, k) * cache[n + k];
  Rational second;
  for (std::uint64_t k = 0; k <= n; ++k) second += binom(n, k) * cache[m + k];
  return sign_power(m) * first - sign_power(n) * second;
}

GeneralizedTerms generalized_terms(const IdentityParams& params,
                                   const BernoulliCache& cache) {
  const std::uint64_t m = params.m, n = params.n, q = params.q;
  cache.require(m + n + q);
  GeneralizedTerms t;
  for (std::uint64_t k = 0; k <= m + q; ++k) {
    t.first += binom(m + q, k) * binom(n + q + k, q) * cache[n + k];
  }
  for (std::uint64_t k = 0; k <= n + q; ++k) {
    t.second += binom(n + q, k) * binom(m + q + k, q) * cache[m + k];
  }
  return t;
}

Rational generalized_residual(const IdentityParams& params, const BernoulliCache& cache) {
  const GeneralizedTerms t = generalized_terms(params, cache);
  return sign_power(params.m) * t.first -
         sign_power(static_cast<std::uint64_t>(params.n) + params.q) * t.second;
}

std::optional<SpecialCase> parse_special_case(std::string_view name) {
  if (name == "carlitz") return SpecialCase::carlitz;
  if (name == "momiyama") return SpecialCase::momiyama;
  if (name == "kaneko_seidel") return SpecialCase::kaneko_seidel;
  if (name == "chen_sun") return SpecialCase::chen_sun;
  if (name == "zekiri_bencherif") return SpecialCase::zekiri_bencherif;
  return std::nullopt;
}

std::string_view special_case_name(SpecialCase which) {
  switch (which) {
    case SpecialCase::carlitz:
      return "carlitz";
    case SpecialCase::momiyama:
      return "momiyama";
    case SpecialCase::kaneko_seidel:
      return "kaneko_seidel";
    case SpecialCase::chen_sun:
      return "chen_sun";
    case SpecialCase::zekiri_bencherif:
      return "zekiri_bencherif";
  }
  return "unknown";
}

IdentityParams bind_special_case(SpecialCase which, const FreeParams& free) {
  switch (which) {
    case SpecialCase::carlitz:
    case SpecialCase::momiyama: {
      require_absent(free.q, "q", which);
      const auto m = require_present(free.m, "m", which);
      const auto n = require_present(free.n, "n", which);
      return {m, n, which == SpecialCase::carlitz ? 0U : 1U};
    }
    case SpecialCase::kaneko_seidel:
    case SpecialCase::chen_sun: {
      require_absent(free.m, "m", which);
      require_absent(free.q, "q", which);
      const auto n = require_present(free.n, "n", which);
      return {n, n, which == SpecialCase::kaneko_seidel ? 1U : 3U};
    }
    case SpecialCase::zekiri_bencherif: {
      require_absent(free.m, "m", which);
      const auto n = require_present(free.n, "n", which);
      const auto q = require_present(free.q, "q", which);
      if (q % 2 == 0) throw InvalidBinding("zekiri_bencherif requires odd q");
      return {n, n, q};
    }
  }
  throw InvalidBinding("unknown special case");
}

Rational special_case(SpecialCase which, const FreeParams& free,
                      const BernoulliCache& cache) {
  return generalized_residual(bind_special_case(which, free), cache);
}

std::optional<IdentityKind> parse_identity(std::string_view name) {
  if (name == "generalized") return IdentityKind::generalized;
  if (const auto sc = parse_special_case(name)) {
    switch (*sc) {
      case SpecialCase::carlitz:
        return IdentityKind::carlitz;
      case SpecialCase::momiyama:
        return IdentityKind::momiyama;
      case SpecialCase::kaneko_seidel:
        return IdentityKind::kaneko_seidel;
      case SpecialCase::chen_sun:
        return IdentityKind::chen_sun;
      case SpecialCase::zekiri_bencherif:
        return IdentityKind::zekiri_bencherif;
    }
  }
  return std::nullopt;
}

std::string_view identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::carlitz:
      return "carlitz";
    case IdentityKind::generalized:
      return "generalized";
    case IdentityKind::momiyama:
      return "momiyama";
    case IdentityKind::kaneko_seidel:
      return "kaneko_seidel";
    case IdentityKind::chen_sun:
      return "chen_sun";
    case IdentityKind::zekiri_bencherif:
      return "zekiri_bencherif";
  }
  return "unknown";
}

std::vector<IdentityParams> grid_points(IdentityKind kind, const GridRange& range) {
  std::vector<IdentityParams> pts;
  switch (kind) {
    case IdentityKind::carlitz:
    case IdentityKind::momiyama: {
      const std::uint32_t q = kind == IdentityKind::carlitz ? 0 : 1;
      for (std::uint32_t m = 0; m <= range.m_max; ++m)
        for (std::uint32_t n = 0; n <= range.n_max; ++n) pts.push_back({m, n, q});
      break;
    }
    case IdentityKind::generalized:
      for (std::uint32_t m = 0; m <= range.m_max; ++m)
        for (std::uint32_t n = 0; n <= range.n_max; ++n)
          for (std::uint32_t q = 0; q <= range.q_max; ++q) pts.push_back({m, n, q});
      break;
    case IdentityKind::kaneko_seidel:
    case IdentityKind::chen_sun: {
      const std::uint32_t q = kind == IdentityKind::kaneko_seidel ? 1 : 3;
      for (std::uint32_t n = 0; n <= range.n_max; ++n) pts.push_back({n, n, q});
      break;
    }
    case IdentityKind::zekiri_bencherif:
      for (std::uint32_t n = 0; n <= range.n_max; ++n)
        for (std::uint32_t q = 1; q <= range.q_max; q += 2) pts.push_back({n, n, q});
      break;
  }
  return pts;
}

std::size_t grid_max_index(IdentityKind kind, const GridRange& range) {
  std::size_t hi = 0;
  for (const auto& p : grid_points(kind, range)) {
    hi = std::max<std::size_t>(hi, static_cast<std::size_t>(p.m) + p.n + p.q);
  }
  return hi;
}

IdentityReport verify_grid(IdentityKind kind, const GridRange& range,
                           const BernoulliCache& cache, unsigned threads) {
  const std::vector<IdentityParams> pts = grid_points(kind, range);
  if (!pts.empty()) cache.require(grid_max_index(kind, range));

  std::vector<Rational> residuals(pts.size());
  const auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      residuals[i] = kind == IdentityKind::carlitz
                         ? carlitz_residual(pts[i].m, pts[i].n, cache)
                         : generalized_residual(pts[i], cache);
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(pts.size(), 1));
  if (workers == 1) {
    evaluate(0, pts.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (pts.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < pts.size(); begin += chunk) {
      pool.emplace_back(evaluate, begin, std::min(pts.size(), begin + chunk));
    }
  }

  IdentityReport report;
  report.identity_name = std::string(identity_name(kind));
  switch (kind) {
    case IdentityKind::carlitz:
      report.grid = "m=" + range_text(range.m_max) + " n=" + range_text(range.n_max) + " q=0";
      break;
    case IdentityKind::momiyama:
      report.grid = "m=" + range_text(range.m_max) + " n=" + range_text(range.n_max) + " q=1";
      break;
    case IdentityKind::generalized:
      report.grid = "m=" + range_text(range.m_max) + " n=" + range_text(range.n_max) +
                    " q=" + range_text(range.q_max);
      break;
    case IdentityKind::kaneko_seidel:
      report.grid = "m=n=" + range_text(range.n_max) + " q=1";
      break;
    case IdentityKind::chen_sun:
      report.grid = "m=n=" + range_text(range.n_max) + " q=3";
      break;
    case IdentityKind::zekiri_bencherif:
      report.grid = "m=n=" + range_text(range.n_max) + " q=odd in 1.." +
                    std::to_string(range.q_max);
      break;
  }
  report.checked = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!residuals[i].is_zero()) report.failures.push_back({pts[i], residuals[i]});
  }
  report.all_zero = report.failures.empty();
  return report;
}

}  // namespace bernoulli
