// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

// bernoulli-cli: exact Bernoulli numbers, proof replay and identity checks.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed (including
// a cache file that violates the Bernoulli invariants), 2 usage or I/O error.

#include <bernoulli_c.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { text, json };

// Thrown to unwind with a specific exit code after printing a message.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "bernoulli-cli: " << message << '\n';
  throw Exit{code};
}

[[noreturn]] void die_status(bk_status status, const std::string& context) {
  std::string msg = context + ": " + bk_status_string(status);
  if (const char* detail = bk_last_error(); detail != nullptr && *detail != '\0') {
    msg += " (" + std::string(detail) + ")";
  }
  const int code = status == BK_ERR_MALFORMED_CACHE ? kExitCheckFailed : kExitUsage;
  die(code, msg);
}

void check(bk_status status, const std::string& context) {
  if (status != BK_OK) die_status(status, context);
}

struct CacheDeleter {
  void operator()(bk_cache* c) const { bk_cache_destroy(c); }
};
struct PolyDeleter {
  void operator()(bk_poly* p) const { bk_poly_destroy(p); }
};
struct TraceDeleter {
  void operator()(bk_trace* t) const { bk_trace_destroy(t); }
};
struct ReportDeleter {
  void operator()(bk_report* r) const { bk_report_destroy(r); }
};
struct SequenceDeleter {
  void operator()(bk_sequence* s) const { bk_sequence_destroy(s); }
};

using CachePtr = std::unique_ptr<bk_cache, CacheDeleter>;
using PolyPtr = std::unique_ptr<bk_poly, PolyDeleter>;
using TracePtr = std::unique_ptr<bk_trace, TraceDeleter>;
using ReportPtr = std::unique_ptr<bk_report, ReportDeleter>;
using SequencePtr = std::unique_ptr<bk_sequence, SequenceDeleter>;

// Takes ownership of a bk_* string.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  bk_string_free(s);
  return out;
}

// Text output keeps bare integers; JSON always carries the denominator.
std::string as_fraction(const std::string& r) {
  return r.find('/') == std::string::npos ? r + "/1" : r;
}

struct Options {
  Format format = Format::text;
  std::string cache_path;
  std::optional<std::string> method;
};

std::optional<std::string> resolve_cache_path(const Options& opts) {
  if (!opts.cache_path.empty()) return opts.cache_path;
  if (const char* env = std::getenv("BERNOULLI_CACHE"); env != nullptr && *env != '\0') {
    return std::string(env);
  }
  return std::nullopt;
}

// Loads the configured cache file when it exists, otherwise starts cold.
// The result is extended to max_index before it is handed out.
CachePtr prepared_cache(const Options& opts, std::size_t max_index) {
  bk_cache* raw = nullptr;
  const auto path = resolve_cache_path(opts);
  if (path && std::filesystem::exists(*path)) {
    check(bk_cache_load(path->c_str(), &raw), "loading cache " + *path);
  } else {
    check(bk_cache_create(&raw), "creating cache");
  }
  CachePtr cache(raw);
  check(bk_cache_extend(cache.get(), static_cast<uint32_t>(max_index)), "extending cache");
  return cache;
}

json poly_json(const bk_poly* p) {
  json coeffs = json::array();
  for (long i = 0; i <= bk_poly_degree(p); ++i) {
    char* c = nullptr;
    check(bk_poly_coeff(p, static_cast<size_t>(i), &c), "reading coefficient");
    coeffs.push_back(as_fraction(take(c)));
  }
  char* text = nullptr;
  check(bk_poly_text(p, &text), "rendering polynomial");
  return json{{"text", take(text)}, {"coeffs", coeffs}};
}

std::string poly_text(const bk_poly* p) {
  char* text = nullptr;
  check(bk_poly_text(p, &text), "rendering polynomial");
  return take(text);
}

bk_method method_or(const Options& opts, bk_method fallback) {
  if (!opts.method) return fallback;
  bk_method m{};
  check(bk_method_from_name(opts.method->c_str(), &m), "--method");
  return m;
}

// ---- subcommands ----------------------------------------------------------

int cmd_bernoulli(const Options& opts, uint32_t n) {
  std::string value;
  if (!opts.method && resolve_cache_path(opts)) {
    CachePtr cache = prepared_cache(opts, n);
    char* v = nullptr;
    check(bk_cache_value(cache.get(), n, &v), "reading cache");
    value = take(v);
  } else {
    char* v = nullptr;
    check(bk_bernoulli_number(n, method_or(opts, BK_METHOD_RECURRENCE), &v), "computing B_n");
    value = take(v);
  }
  if (opts.format == Format::json) {
    std::cout << json{{"n", n}, {"value", as_fraction(value)}}.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return kExitOk;
}

int cmd_bpoly(const Options& opts, uint32_t n) {
  CachePtr cache = prepared_cache(opts, n);
  bk_poly* raw = nullptr;
  check(bk_bernoulli_polynomial(cache.get(), n, &raw), "building B_n(x)");
  PolyPtr poly(raw);
  if (opts.format == Format::json) {
    json j = poly_json(poly.get());
    std::cout << json{{"n", n}, {"coeffs", j["coeffs"]}, {"text", j["text"]}}.dump() << '\n';
  } else {
    std::cout << poly_text(poly.get()) << '\n';
  }
  return kExitOk;
}

int cmd_prove(const Options& opts, uint32_t m, uint32_t n, uint32_t q) {
  CachePtr cache = prepared_cache(opts, static_cast<std::size_t>(m) + n + q);
  bk_trace* raw = nullptr;
  check(bk_replay_proof(cache.get(), m, n, q, &raw), "replaying proof");
  TracePtr trace(raw);
  char* l = nullptr;
  check(bk_trace_l_value(trace.get(), &l), "reading L value");
  const std::string l_value = take(l);
  const bool holds = bk_trace_holds(trace.get()) != 0;
  const auto* p = bk_trace_poly_get(trace.get(), BK_TRACE_P);
  const auto* ar = bk_trace_poly_get(trace.get(), BK_TRACE_ANTISYMMETRY_RESIDUAL);
  const auto* pq = bk_trace_poly_get(trace.get(), BK_TRACE_PQ);
  const auto* pqr = bk_trace_poly_get(trace.get(), BK_TRACE_PQ_ANTISYMMETRY_RESIDUAL);

  if (opts.format == Format::json) {
    json j{{"m", m},
           {"n", n},
           {"q", q},
           {"p", poly_json(p)},
           {"antisymmetry_residual", poly_json(ar)},
           {"pq", poly_json(pq)},
           {"pq_antisymmetry_residual", poly_json(pqr)},
           {"odd_in_shifted", bk_trace_odd_in_shifted(trace.get()) != 0},
           {"expansion_match", bk_trace_expansion_match(trace.get()) != 0},
           {"l_value", as_fraction(l_value)},
           {"degenerate", bk_trace_degenerate(trace.get()) != 0},
           {"holds", holds}};
    std::cout << j.dump() << '\n';
  } else {
    const auto yn = [](int v) { return v != 0 ? "true" : "false"; };
    std::cout << "params: m=" << m << " n=" << n << " q=" << q << '\n'
              << "P(x) = " << poly_text(p) << '\n'
              << "P(-1/2+x) + (-1)^q P(-1/2-x) = " << poly_text(ar) << '\n'
              << "P^(q)(x) = " << poly_text(pq) << '\n'
              << "P^(q)(-1/2+x) + P^(q)(-1/2-x) = " << poly_text(pqr) << '\n'
              << "odd_in_shifted: " << yn(bk_trace_odd_in_shifted(trace.get())) << '\n'
              << "expansion_match: " << yn(bk_trace_expansion_match(trace.get())) << '\n'
              << "l_value: " << l_value << '\n'
              << "degenerate: " << yn(bk_trace_degenerate(trace.get())) << '\n'
              << "result: " << (holds ? "holds" : "FAILED") << '\n';
  }
  return holds ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& opts, const std::string& identity, uint32_t m_max,
               uint32_t n_max, uint32_t q_max, unsigned threads) {
  size_t max_index = 0;
  const bk_status s = bk_grid_max_index(identity.c_str(), m_max, n_max, q_max, &max_index);
  if (s == BK_ERR_UNKNOWN_NAME) die(kExitUsage, "unknown identity: " + identity);
  check(s, "sizing grid");
  CachePtr cache = prepared_cache(opts, max_index);
  bk_report* raw = nullptr;
  check(bk_verify_grid(cache.get(), identity.c_str(), m_max, n_max, q_max, threads, &raw),
        "verifying grid");
  ReportPtr report(raw);

  json failures = json::array();
  std::vector<std::string> failure_lines;
  for (size_t i = 0; i < bk_report_failure_count(report.get()); ++i) {
    uint32_t m = 0, n = 0, q = 0;
    char* r = nullptr;
    check(bk_report_failure(report.get(), i, &m, &n, &q, &r), "reading failure");
    const std::string residual = take(r);
    failures.push_back(json{{"m", m}, {"n", n}, {"q", q}, {"residual", residual}});
    failure_lines.push_back("  m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " q=" + std::to_string(q) + " residual=" + residual);
  }
  const bool all_zero = bk_report_all_zero(report.get()) != 0;
  if (opts.format == Format::json) {
    json j{{"identity", bk_report_identity(report.get())},
           {"grid", bk_report_grid(report.get())},
           {"checked", bk_report_checked(report.get())},
           {"failures", failures},
           {"all_zero", all_zero}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "identity: " << bk_report_identity(report.get()) << '\n'
              << "grid: " << bk_report_grid(report.get()) << '\n'
              << "checked: " << bk_report_checked(report.get()) << '\n'
              << "failures: " << failure_lines.size() << '\n';
    for (const auto& line : failure_lines) std::cout << line << '\n';
    std::cout << "all_zero: " << (all_zero ? "true" : "false") << '\n';
  }
  return all_zero ? kExitOk : kExitCheckFailed;
}

std::vector<std::string> sequence_values(const bk_sequence* seq) {
  std::vector<std::string> out;
  for (size_t i = 0; i < bk_sequence_size(seq); ++i) {
    char* v = nullptr;
    check(bk_sequence_value(seq, i, &v), "reading sequence");
    out.push_back(take(v));
  }
  return out;
}

int cmd_bench(const Options& opts, uint32_t n_max, const std::vector<std::string>& names,
              unsigned repetitions) {
  if (repetitions == 0) die(kExitUsage, "--repetitions must be at least 1");
  std::vector<bk_method> methods;
  for (const auto& name : names) {
    bk_method m{};
    if (bk_method_from_name(name.c_str(), &m) != BK_OK) die(kExitUsage, "unknown method: " + name);
    methods.push_back(m);
  }
  if (methods.empty()) die(kExitUsage, "no methods given");

  struct Row {
    bk_method method;
    double median_seconds;
    std::vector<std::string> values;
  };
  std::vector<Row> rows;
  for (const bk_method m : methods) {
    std::vector<double> times;
    std::vector<std::string> values;
    for (unsigned r = 0; r < repetitions; ++r) {
      bk_sequence* raw = nullptr;
      const auto t0 = std::chrono::steady_clock::now();
      const bk_status s = bk_sequence_compute(n_max, m, &raw);
      const auto t1 = std::chrono::steady_clock::now();
      check(s, std::string("computing with ") + bk_method_name(m));
      SequencePtr seq(raw);
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
      if (r == 0) values = sequence_values(seq.get());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median =
        times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
    rows.push_back({m, median, std::move(values)});
  }
#ifdef BK_BENCH_INJECT_FAULT
  // Test-only build: corrupt the last method's final value.
  rows.back().values.back() = rows.back().values.back() == "1" ? "2" : "1";
#endif

  std::optional<std::size_t> mismatch;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.values.size(); ++i) {
      if (row.values[i] != rows.front().values[i]) {
        mismatch = mismatch ? std::min(*mismatch, i) : i;
        break;
      }
    }
  }
  const bool agree = !mismatch.has_value();

  if (opts.format == Format::json) {
    json results = json::array();
    for (const auto& row : rows) {
      results.push_back(json{{"method", bk_method_name(row.method)},
                             {"median_seconds", row.median_seconds},
                             {"last_value", as_fraction(row.values.back())}});
    }
    json j{{"n_max", n_max}, {"repetitions", repetitions}, {"results", results}, {"agree", agree}};
    if (mismatch) j["first_mismatch"] = *mismatch;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << std::left << std::setw(20) << "method" << std::setw(16) << "median_ms"
              << "B_" << n_max << '\n';
    for (const auto& row : rows) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(3) << row.median_seconds * 1e3;
      std::cout << std::left << std::setw(20) << bk_method_name(row.method) << std::setw(16)
                << ms.str() << row.values.back() << '\n';
    }
    if (agree) {
      std::cout << "values: agree\n";
    } else {
      std::cout << "values: MISMATCH at n=" << *mismatch << '\n';
    }
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_cache(const Options& opts, const std::string& action, const std::string& path_arg,
              std::optional<uint32_t> n_max) {
  std::string path = path_arg;
  if (path.empty()) {
    const auto resolved = resolve_cache_path(opts);
    if (!resolved) die(kExitUsage, "no cache path (give one, use --cache or set BERNOULLI_CACHE)");
    path = *resolved;
  }

  const auto report = [&](const char* verb, std::size_t size) {
    const long long max_index = static_cast<long long>(size) - 1;
    if (opts.format == Format::json) {
      std::cout << json{{"action", action}, {"path", path}, {"entries", size},
                        {"max_index", max_index}}
                       .dump()
                << '\n';
    } else {
      std::cout << verb << ' ' << path << ": " << size << " entries, max_index " << max_index
                << '\n';
    }
  };

  if (action == "save") {
    if (!n_max) die(kExitUsage, "cache save requires --n-max");
    bk_cache* raw = nullptr;
    check(bk_cache_create(&raw), "creating cache");
    CachePtr cache(raw);
    check(bk_cache_extend(cache.get(), *n_max), "extending cache");
    check(bk_cache_save(cache.get(), path.c_str()), "saving cache");
    report("saved", bk_cache_size(cache.get()));
    return kExitOk;
  }
  if (n_max) die(kExitUsage, "--n-max only applies to cache save");
  bk_cache* raw = nullptr;
  check(bk_cache_load(path.c_str(), &raw), "loading cache " + path);
  CachePtr cache(raw);
  report(action == "load" ? "loaded" : "info", bk_cache_size(cache.get()));
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Bernoulli numbers, proof replay and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cache", opts.cache_path,
                 "Cache file (default: $BERNOULLI_CACHE)");
  std::string method;
  app.add_option("--method", method, "recurrence | series | akiyama_tanigawa");

  uint32_t n = 0;
  auto* bern = app.add_subcommand("bernoulli", "Print B_n");
  bern->add_option("n", n)->required();

  uint32_t bpoly_n = 0;
  auto* bpoly = app.add_subcommand("bpoly", "Print the Bernoulli polynomial B_n(x)");
  bpoly->add_option("n", bpoly_n)->required();

  uint32_t pm = 0, pn = 0, pq = 0;
  auto* prove = app.add_subcommand("prove", "Replay the oddness proof for (m, n, q)");
  prove->add_option("m", pm)->required();
  prove->add_option("n", pn)->required();
  prove->add_option("q", pq)->required();

  std::string identity;
  uint32_t m_max = 10, n_max = 10, q_max = 4;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter grid");
  verify->add_option("identity", identity,
                     "carlitz | generalized | momiyama | kaneko_seidel | chen_sun | "
                     "zekiri_bencherif")
      ->required();
  verify->add_option("--m-max", m_max)->capture_default_str();
  verify->add_option("--n-max", n_max)->capture_default_str();
  verify->add_option("--q-max", q_max)->capture_default_str();
  verify->add_option("--threads", threads)->check(CLI::PositiveNumber);

  uint32_t bench_n = 100;
  unsigned repetitions = 5;
  std::vector<std::string> methods = {"recurrence", "series", "akiyama_tanigawa"};
  auto* bench = app.add_subcommand("bench", "Time the Bernoulli algorithms against each other");
  bench->add_option("--n-max", bench_n)->capture_default_str();
  bench->add_option("--methods", methods)->delimiter(',');
  bench->add_option("--repetitions", repetitions)->capture_default_str();

  std::string action, cache_file;
  std::optional<uint32_t> cache_n;
  auto* cache = app.add_subcommand("cache", "Save, load or inspect a cache file");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"save", "load", "info"}));
  cache->add_option("path", cache_file);
  cache->add_option("--n-max", cache_n, "Largest index to save");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  opts.format = format == "json" ? Format::json : Format::text;
  if (!method.empty()) opts.method = method;
  if (opts.method) {
    bk_method probe{};
    if (bk_method_from_name(opts.method->c_str(), &probe) != BK_OK) {
      die(kExitUsage, "unknown method: " + *opts.method);
    }
  }

  if (*bern) return cmd_bernoulli(opts, n);
  if (*bpoly) return cmd_bpoly(opts, bpoly_n);
  if (*prove) return cmd_prove(opts, pm, pn, pq);
  if (*verify) return cmd_verify(opts, identity, m_max, n_max, q_max, threads);
  if (*bench) return cmd_bench(opts, bench_n, methods, repetitions);
  if (*cache) return cmd_cache(opts, action, cache_file, cache_n);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "bernoulli-cli: " << e.what() << '\n';
    return kExitUsage;
  }
}
