// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <bernoulli_c.h>

#include <bernoulli/bernoulli.hpp>
#include <bernoulli/identities.hpp>
#include <bernoulli/umbral.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <string>
#include <utility>

struct bk_cache {
  bernoulli::BernoulliCache impl;
};

struct bk_poly {
  bernoulli::Polynomial impl;
};

struct bk_sequence {
  std::vector<bernoulli::Rational> values;
};

struct bk_trace {
  bernoulli::ProofTrace impl;
  bk_poly polys[4];
};

struct bk_report {
  bernoulli::IdentityReport impl;
};

namespace {

thread_local std::string g_last_error;

bk_status fail(bk_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool to_method(bk_method m, bernoulli::Method* out) {
  switch (m) {
    case BK_METHOD_RECURRENCE:
      *out = bernoulli::Method::recurrence;
      return true;
    case BK_METHOD_SERIES:
      *out = bernoulli::Method::series;
      return true;
    case BK_METHOD_AKIYAMA_TANIGAWA:
      *out = bernoulli::Method::akiyama_tanigawa;
      return true;
  }
  return false;
}

// Runs body, translating exceptions into status codes.
template <class F>
bk_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const bernoulli::CacheTooShort& e) {
    return fail(BK_ERR_CACHE_TOO_SHORT, e.what());
  } catch (const bernoulli::CacheFormatError& e) {
    return fail(BK_ERR_MALFORMED_CACHE, e.what());
  } catch (const bernoulli::InvalidBinding& e) {
    return fail(BK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BK_ERR_INTERNAL, "unknown exception");
  }
}

#define BK_REQUIRE(cond)                                               \
  do {                                                                 \
    if (!(cond)) return fail(BK_ERR_INVALID_ARGUMENT, "bad argument: " #cond); \
  } while (0)

std::optional<std::uint32_t> optional_param(int64_t v) {
  if (v < 0) return std::nullopt;
  return static_cast<std::uint32_t>(v);
}

}  // namespace

extern "C" {

const char* bk_status_string(bk_status status) {
  switch (status) {
    case BK_OK:
      return "ok";
    case BK_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case BK_ERR_UNKNOWN_NAME:
      return "unknown name";
    case BK_ERR_CACHE_TOO_SHORT:
      return "cache too short";
    case BK_ERR_MALFORMED_CACHE:
      return "malformed cache";
    case BK_ERR_IO:
      return "i/o error";
    case BK_ERR_INTERNAL:
      return "internal error";
  }
  return "unrecognized status";
}

const char* bk_last_error(void) { return g_last_error.c_str(); }

void bk_string_free(char* s) { std::free(s); }

bk_status bk_method_from_name(const char* name, bk_method* out) {
  BK_REQUIRE(name != nullptr && out != nullptr);
  const auto m = bernoulli::parse_method(name);
  if (!m) return fail(BK_ERR_UNKNOWN_NAME, std::string("unknown method: ") + name);
  switch (*m) {
    case bernoulli::Method::recurrence:
      *out = BK_METHOD_RECURRENCE;
      break;
    case bernoulli::Method::series:
      *out = BK_METHOD_SERIES;
      break;
    case bernoulli::Method::akiyama_tanigawa:
      *out = BK_METHOD_AKIYAMA_TANIGAWA;
      break;
  }
  return BK_OK;
}

const char* bk_method_name(bk_method method) {
  bernoulli::Method m{};
  if (!to_method(method, &m)) return nullptr;
  return bernoulli::method_name(m).data();
}

bk_status bk_bernoulli_number(uint32_t n, bk_method method, char** out) {
  BK_REQUIRE(out != nullptr);
  bernoulli::Method m{};
  if (!to_method(method, &m)) return fail(BK_ERR_INVALID_ARGUMENT, "bad method value");
  return guarded([&] {
    *out = dup_string(bernoulli::bernoulli_number(n, m).to_string());
    return BK_OK;
  });
}

bk_status bk_sequence_compute(uint32_t n_max, bk_method method, bk_sequence** out) {
  BK_REQUIRE(out != nullptr);
  bernoulli::Method m{};
  if (!to_method(method, &m)) return fail(BK_ERR_INVALID_ARGUMENT, "bad method value");
  return guarded([&] {
    *out = new bk_sequence{bernoulli::bernoulli_sequence(n_max, m)};
    return BK_OK;
  });
}

void bk_sequence_destroy(bk_sequence* seq) { delete seq; }

size_t bk_sequence_size(const bk_sequence* seq) {
  return seq == nullptr ? 0 : seq->values.size();
}

bk_status bk_sequence_value(const bk_sequence* seq, size_t i, char** out) {
  BK_REQUIRE(seq != nullptr && out != nullptr && i < seq->values.size());
  return guarded([&] {
    *out = dup_string(seq->values[i].to_string());
    return BK_OK;
  });
}

bk_status bk_cache_create(bk_cache** out) {
  BK_REQUIRE(out != nullptr);
  return guarded([&] {
    *out = new bk_cache{};
    return BK_OK;
  });
}

void bk_cache_destroy(bk_cache* cache) { delete cache; }

bk_status bk_cache_extend(bk_cache* cache, uint32_t new_max) {
  BK_REQUIRE(cache != nullptr);
  return guarded([&] {
    cache->impl.extend(new_max);
    return BK_OK;
  });
}

size_t bk_cache_size(const bk_cache* cache) {
  return cache == nullptr ? 0 : cache->impl.size();
}

bk_status bk_cache_value(const bk_cache* cache, size_t n, char** out) {
  BK_REQUIRE(cache != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(cache->impl.at(n).to_string());
    return BK_OK;
  });
}

bk_status bk_cache_save(const bk_cache* cache, const char* path) {
  BK_REQUIRE(cache != nullptr && path != nullptr);
  return guarded([&] {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) return fail(BK_ERR_IO, std::string("cannot open for writing: ") + path);
    bernoulli::save_cache(cache->impl, f);
    f.flush();
    if (!f) return fail(BK_ERR_IO, std::string("write failed: ") + path);
    return BK_OK;
  });
}

bk_status bk_cache_load(const char* path, bk_cache** out) {
  BK_REQUIRE(path != nullptr && out != nullptr);
  return guarded([&] {
    std::ifstream f(path, std::ios::binary);
    if (!f) return fail(BK_ERR_IO, std::string("cannot open for reading: ") + path);
    auto loaded = bernoulli::load_cache(f);
    *out = new bk_cache{std::move(loaded)};
    return BK_OK;
  });
}

bk_status bk_bernoulli_polynomial(const bk_cache* cache, uint32_t n, bk_poly** out) {
  BK_REQUIRE(cache != nullptr && out != nullptr);
  return guarded([&] {
    *out = new bk_poly{bernoulli::bernoulli_polynomial(n, cache->impl)};
    return BK_OK;
  });
}

void bk_poly_destroy(bk_poly* poly) { delete poly; }

long bk_poly_degree(const bk_poly* poly) {
  return poly == nullptr ? -1 : static_cast<long>(poly->impl.degree());
}

bk_status bk_poly_coeff(const bk_poly* poly, size_t i, char** out) {
  BK_REQUIRE(poly != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(poly->impl.coeff(i).to_string());
    return BK_OK;
  });
}

bk_status bk_poly_text(const bk_poly* poly, char** out) {
  BK_REQUIRE(poly != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(poly->impl.to_string());
    return BK_OK;
  });
}

bk_status bk_replay_proof(const bk_cache* cache, uint32_t m, uint32_t n, uint32_t q,
                          bk_trace** out) {
  BK_REQUIRE(cache != nullptr && out != nullptr);
  return guarded([&] {
    auto trace = bernoulli::replay_proof({m, n, q}, cache->impl);
    auto* t = new bk_trace{};
    t->polys[BK_TRACE_P].impl = trace.p;
    t->polys[BK_TRACE_ANTISYMMETRY_RESIDUAL].impl = trace.antisymmetry_residual;
    t->polys[BK_TRACE_PQ].impl = trace.pq;
    t->polys[BK_TRACE_PQ_ANTISYMMETRY_RESIDUAL].impl = trace.pq_antisymmetry_residual;
    t->impl = std::move(trace);
    *out = t;
    return BK_OK;
  });
}

void bk_trace_destroy(bk_trace* trace) { delete trace; }

const bk_poly* bk_trace_poly_get(const bk_trace* trace, bk_trace_poly which) {
  if (trace == nullptr || which < BK_TRACE_P || which > BK_TRACE_PQ_ANTISYMMETRY_RESIDUAL) {
    return nullptr;
  }
  return &trace->polys[which];
}

int bk_trace_odd_in_shifted(const bk_trace* trace) {
  return trace != nullptr && trace->impl.odd_in_shifted;
}

int bk_trace_expansion_match(const bk_trace* trace) {
  return trace != nullptr && trace->impl.expansion_match;
}

int bk_trace_degenerate(const bk_trace* trace) {
  return trace != nullptr && trace->impl.degenerate();
}

int bk_trace_holds(const bk_trace* trace) { return trace != nullptr && trace->impl.holds(); }

bk_status bk_trace_l_value(const bk_trace* trace, char** out) {
  BK_REQUIRE(trace != nullptr && out != nullptr);
  return guarded([&] {
    *out = dup_string(trace->impl.l_value.to_string());
    return BK_OK;
  });
}

bk_status bk_grid_max_index(const char* identity, uint32_t m_max, uint32_t n_max,
                            uint32_t q_max, size_t* out) {
  BK_REQUIRE(identity != nullptr && out != nullptr);
  const auto kind = bernoulli::parse_identity(identity);
  if (!kind) return fail(BK_ERR_UNKNOWN_NAME, std::string("unknown identity: ") + identity);
  return guarded([&] {
    *out = bernoulli::grid_max_index(*kind, {m_max, n_max, q_max});
    return BK_OK;
  });
}

bk_status bk_verify_grid(const bk_cache* cache, const char* identity, uint32_t m_max,
                         uint32_t n_max, uint32_t q_max, unsigned threads,
                         bk_report** out) {
  BK_REQUIRE(cache != nullptr && identity != nullptr && out != nullptr);
  const auto kind = bernoulli::parse_identity(identity);
  if (!kind) return fail(BK_ERR_UNKNOWN_NAME, std::string("unknown identity: ") + identity);
  return guarded([&] {
    *out = new bk_report{
        bernoulli::verify_grid(*kind, {m_max, n_max, q_max}, cache->impl, threads)};
    return BK_OK;
  });
}

void bk_report_destroy(bk_report* report) { delete report; }

const char* bk_report_identity(const bk_report* report) {
  return report == nullptr ? nullptr : report->impl.identity_name.c_str();
}

const char* bk_report_grid(const bk_report* report) {
  return report == nullptr ? nullptr : report->impl.grid.c_str();
}

uint64_t bk_report_checked(const bk_report* report) {
  return report == nullptr ? 0 : report->impl.checked;
}

int bk_report_all_zero(const bk_report* report) {
  return report != nullptr && report->impl.all_zero;
}

size_t bk_report_failure_count(const bk_report* report) {
  return report == nullptr ? 0 : report->impl.failures.size();
}

bk_status bk_report_failure(const bk_report* report, size_t i, uint32_t* m, uint32_t* n,
                            uint32_t* q, char** residual) {
  BK_REQUIRE(report != nullptr && i < report->impl.failures.size());
  return guarded([&] {
    const auto& f = report->impl.failures[i];
    if (m) *m = f.params.m;
    if (n) *n = f.params.n;
    if (q) *q = f.params.q;
    if (residual) *residual = dup_string(f.residual.to_fraction_string());
    return BK_OK;
  });
}

bk_status bk_special_case(const bk_cache* cache, const char* name, int64_t m, int64_t n,
                          int64_t q, char** residual) {
  BK_REQUIRE(cache != nullptr && name != nullptr && residual != nullptr);
  constexpr int64_t kMax = std::numeric_limits<uint32_t>::max();
  BK_REQUIRE(m <= kMax && n <= kMax && q <= kMax);
  const auto which = bernoulli::parse_special_case(name);
  if (!which) return fail(BK_ERR_UNKNOWN_NAME, std::string("unknown special case: ") + name);
  return guarded([&] {
    const bernoulli::FreeParams free{optional_param(m), optional_param(n), optional_param(q)};
    *residual = dup_string(bernoulli::special_case(*which, free, cache->impl).to_string());
    return BK_OK;
  });
}

}  // extern "C"
