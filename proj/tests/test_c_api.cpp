// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bernoulli_c.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  bk_string_free(s);
  return out;
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

struct Cache {
  bk_cache* ptr = nullptr;
  explicit Cache(uint32_t n) {
    REQUIRE(bk_cache_create(&ptr) == BK_OK);
    REQUIRE(bk_cache_extend(ptr, n) == BK_OK);
  }
  ~Cache() { bk_cache_destroy(ptr); }
};

}  // namespace

TEST_CASE("status strings") {
  CHECK(std::string(bk_status_string(BK_OK)) == "ok");
  CHECK(std::string(bk_status_string(BK_ERR_MALFORMED_CACHE)) == "malformed cache");
}

TEST_CASE("bernoulli numbers through the C API") {
  char* out = nullptr;
  REQUIRE(bk_bernoulli_number(1, BK_METHOD_SERIES, &out) == BK_OK);
  CHECK(take(out) == "-1/2");
  REQUIRE(bk_bernoulli_number(12, BK_METHOD_AKIYAMA_TANIGAWA, &out) == BK_OK);
  CHECK(take(out) == "-691/2730");
  CHECK(bk_bernoulli_number(1, static_cast<bk_method>(9), &out) == BK_ERR_INVALID_ARGUMENT);
  CHECK(bk_bernoulli_number(1, BK_METHOD_SERIES, nullptr) == BK_ERR_INVALID_ARGUMENT);

  bk_method m{};
  CHECK(bk_method_from_name("akiyama_tanigawa", &m) == BK_OK);
  CHECK(m == BK_METHOD_AKIYAMA_TANIGAWA);
  CHECK(bk_method_from_name("euler", &m) == BK_ERR_UNKNOWN_NAME);
  CHECK(std::string(bk_last_error()).find("euler") != std::string::npos);
  CHECK(std::string(bk_method_name(BK_METHOD_SERIES)) == "series");
}

TEST_CASE("sequences") {
  bk_sequence* seq = nullptr;
  REQUIRE(bk_sequence_compute(6, BK_METHOD_RECURRENCE, &seq) == BK_OK);
  CHECK(bk_sequence_size(seq) == 7);
  char* v = nullptr;
  REQUIRE(bk_sequence_value(seq, 6, &v) == BK_OK);
  CHECK(take(v) == "1/42");
  CHECK(bk_sequence_value(seq, 7, &v) == BK_ERR_INVALID_ARGUMENT);
  bk_sequence_destroy(seq);
}

TEST_CASE("cache handle") {
  Cache c(10);
  CHECK(bk_cache_size(c.ptr) == 11);
  char* v = nullptr;
  REQUIRE(bk_cache_value(c.ptr, 10, &v) == BK_OK);
  CHECK(take(v) == "5/66");
  CHECK(bk_cache_value(c.ptr, 11, &v) == BK_ERR_CACHE_TOO_SHORT);
}

TEST_CASE("cache save and load") {
  const auto path = temp_file("bk_c_api_cache.tsv");
  Cache c(30);
  REQUIRE(bk_cache_save(c.ptr, path.c_str()) == BK_OK);
  bk_cache* back = nullptr;
  REQUIRE(bk_cache_load(path.c_str(), &back) == BK_OK);
  CHECK(bk_cache_size(back) == 31);
  for (size_t i = 0; i <= 30; ++i) {
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(bk_cache_value(c.ptr, i, &a) == BK_OK);
    REQUIRE(bk_cache_value(back, i, &b) == BK_OK);
    CHECK(take(a) == take(b));
  }
  bk_cache_destroy(back);

  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << "0\t1/1\n1\t-1/2\n2\t1/6\n3\t1/3\n";
  }
  bk_cache* bad = nullptr;
  CHECK(bk_cache_load(path.c_str(), &bad) == BK_ERR_MALFORMED_CACHE);
  CHECK(bad == nullptr);
  std::filesystem::remove(path);
  CHECK(bk_cache_load(path.c_str(), &bad) == BK_ERR_IO);
}

TEST_CASE("Bernoulli polynomial handle") {
  Cache c(4);
  bk_poly* p = nullptr;
  REQUIRE(bk_bernoulli_polynomial(c.ptr, 2, &p) == BK_OK);
  CHECK(bk_poly_degree(p) == 2);
  char* s = nullptr;
  REQUIRE(bk_poly_text(p, &s) == BK_OK);
  CHECK(take(s) == "1/6 - x + x^2");
  REQUIRE(bk_poly_coeff(p, 1, &s) == BK_OK);
  CHECK(take(s) == "-1");
  REQUIRE(bk_poly_coeff(p, 9, &s) == BK_OK);
  CHECK(take(s) == "0");
  bk_poly_destroy(p);
  CHECK(bk_bernoulli_polynomial(c.ptr, 5, &p) == BK_ERR_CACHE_TOO_SHORT);
}

TEST_CASE("proof trace handle") {
  Cache c(10);
  bk_trace* t = nullptr;
  REQUIRE(bk_replay_proof(c.ptr, 2, 1, 3, &t) == BK_OK);
  CHECK(bk_trace_holds(t));
  CHECK(bk_trace_odd_in_shifted(t));
  CHECK(bk_trace_expansion_match(t));
  CHECK_FALSE(bk_trace_degenerate(t));
  char* s = nullptr;
  REQUIRE(bk_trace_l_value(t, &s) == BK_OK);
  CHECK(take(s) == "0");
  REQUIRE(bk_poly_text(bk_trace_poly_get(t, BK_TRACE_ANTISYMMETRY_RESIDUAL), &s) == BK_OK);
  CHECK(take(s) == "0");
  CHECK(bk_poly_degree(bk_trace_poly_get(t, BK_TRACE_P)) == 8);
  CHECK(bk_trace_poly_get(t, static_cast<bk_trace_poly>(7)) == nullptr);
  bk_trace_destroy(t);

  REQUIRE(bk_replay_proof(c.ptr, 3, 3, 2, &t) == BK_OK);
  CHECK(bk_trace_degenerate(t));
  CHECK(bk_trace_holds(t));
  bk_trace_destroy(t);

  CHECK(bk_replay_proof(c.ptr, 5, 5, 1, &t) == BK_ERR_CACHE_TOO_SHORT);
}

TEST_CASE("grid verification handle") {
  size_t need = 0;
  REQUIRE(bk_grid_max_index("generalized", 6, 6, 4, &need) == BK_OK);
  CHECK(need == 16);
  Cache c(static_cast<uint32_t>(need));
  bk_report* r = nullptr;
  REQUIRE(bk_verify_grid(c.ptr, "generalized", 6, 6, 4, 2, &r) == BK_OK);
  CHECK(bk_report_checked(r) == 245);
  CHECK(bk_report_all_zero(r));
  CHECK(bk_report_failure_count(r) == 0);
  CHECK(std::string(bk_report_identity(r)) == "generalized");
  CHECK(bk_report_failure(r, 0, nullptr, nullptr, nullptr, nullptr) == BK_ERR_INVALID_ARGUMENT);
  bk_report_destroy(r);
  CHECK(bk_verify_grid(c.ptr, "nosuch", 1, 1, 1, 1, &r) == BK_ERR_UNKNOWN_NAME);
  CHECK(bk_verify_grid(c.ptr, "generalized", 9, 9, 9, 1, &r) == BK_ERR_CACHE_TOO_SHORT);
}

TEST_CASE("grid failures are reported through the handle") {
  const auto path = temp_file("bk_c_api_corrupt.tsv");
  {
    // B_2 replaced by 1/5; passes the structural invariants.
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << "0\t1/1\n1\t-1/2\n2\t1/5\n3\t0/1\n4\t-1/30\n";
  }
  bk_cache* c = nullptr;
  REQUIRE(bk_cache_load(path.c_str(), &c) == BK_OK);
  bk_report* r = nullptr;
  REQUIRE(bk_verify_grid(c, "carlitz", 2, 2, 0, 1, &r) == BK_OK);
  CHECK_FALSE(bk_report_all_zero(r));
  REQUIRE(bk_report_failure_count(r) > 0);
  uint32_t m = 99, n = 99, q = 99;
  char* residual = nullptr;
  REQUIRE(bk_report_failure(r, 0, &m, &n, &q, &residual) == BK_OK);
  CHECK(q == 0);
  CHECK(take(residual) != "0/1");
  bk_report_destroy(r);
  bk_cache_destroy(c);
  std::filesystem::remove(path);
}

TEST_CASE("special cases through the C API") {
  Cache c(40);
  char* s = nullptr;
  REQUIRE(bk_special_case(c.ptr, "kaneko_seidel", -1, 4, -1, &s) == BK_OK);
  CHECK(take(s) == "0");
  REQUIRE(bk_special_case(c.ptr, "chen_sun", -1, 2, -1, &s) == BK_OK);
  CHECK(take(s) == "0");
  CHECK(bk_special_case(c.ptr, "zekiri_bencherif", -1, 3, 2, &s) == BK_ERR_INVALID_ARGUMENT);
  CHECK(bk_special_case(c.ptr, "kaneko_seidel", 1, 4, -1, &s) == BK_ERR_INVALID_ARGUMENT);
  CHECK(bk_special_case(c.ptr, "gauss", -1, 4, -1, &s) == BK_ERR_UNKNOWN_NAME);
}
