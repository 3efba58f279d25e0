// Copyright 2026 The bernoulli-kit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_runner.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using bernoulli::testing::run_cli;
using bernoulli::testing::shell_quote;
using json = nlohmann::json;

namespace {

const std::string kCli = BK_CLI_PATH;
const std::string kFaultyCli = BK_CLI_FAULTY_PATH;

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bk_cli_" + name)).string();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << body;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Every rational in JSON output is a reduced p/q string with q >= 1.
bool fraction_string(const json& v) {
  static const std::regex re("-?[0-9]+/[1-9][0-9]*");
  return v.is_string() && std::regex_match(v.get<std::string>(), re);
}

}  // namespace

TEST_CASE("bernoulli subcommand") {
  CHECK(run_cli(kCli, "bernoulli 0").out == "1\n");
  CHECK(run_cli(kCli, "bernoulli 2").out == "1/6\n");
  const auto r = run_cli(kCli, "bernoulli 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"n\":1,\"value\":\"-1/2\"}\n");
  CHECK(run_cli(kCli, "bernoulli 0 --format json").out == "{\"n\":0,\"value\":\"1/1\"}\n");
  for (const char* m : {"recurrence", "series", "akiyama_tanigawa"}) {
    CHECK(run_cli(kCli, std::string("bernoulli 12 --method ") + m).out == "-691/2730\n");
  }
}

TEST_CASE("bernoulli usage errors exit 2") {
  CHECK(run_cli(kCli, "bernoulli").exit_code == 2);
  CHECK(run_cli(kCli, "bernoulli -3").exit_code == 2);
  CHECK(run_cli(kCli, "bernoulli x").exit_code == 2);
  CHECK(run_cli(kCli, "bernoulli 3 --method euler").exit_code == 2);
  CHECK(run_cli(kCli, "bernoulli 3 --format xml").exit_code == 2);
  CHECK(run_cli(kCli, "").exit_code == 2);
  CHECK(run_cli(kCli, "frobnicate").exit_code == 2);
}

TEST_CASE("bpoly subcommand") {
  const auto r = run_cli(kCli, "bpoly 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1/6 - x + x^2\n");
  const auto j = json::parse(run_cli(kCli, "bpoly 1 --format json").out);
  CHECK(j["coeffs"] == json::array({"-1/2", "1/1"}));
  CHECK(j["n"] == 1);
}

TEST_CASE("prove subcommand") {
  auto r = run_cli(kCli, "prove 2 1 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("l_value: 0\n") != std::string::npos);

  r = run_cli(kCli, "prove 0 0 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("P(x) = 0\n") != std::string::npos);
  CHECK(r.out.find("degenerate: true\n") != std::string::npos);

  r = run_cli(kCli, "prove 2 1 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["odd_in_shifted"] == true);
  CHECK(j["expansion_match"] == true);
  CHECK(j["l_value"] == "0/1");
  CHECK(j["holds"] == true);
  CHECK(j["antisymmetry_residual"]["coeffs"].empty());
  CHECK(j["pq_antisymmetry_residual"]["text"] == "0");
  for (const auto& c : j["p"]["coeffs"]) CHECK(fraction_string(c));

  CHECK(run_cli(kCli, "prove 1 2").exit_code == 2);
  CHECK(run_cli(kCli, "prove 1 2 -1").exit_code == 2);
}

TEST_CASE("prove exits 1 when a step fails") {
  // With B_2 replaced the L value of P^(q) is no longer zero.
  const std::string path = temp_path("prove_bad.tsv");
  write_file(path, "0\t1/1\n1\t-1/2\n2\t1/5\n3\t0/1\n4\t-1/30\n");
  const auto r = run_cli(kCli, "prove 1 2 0 --cache " + shell_quote(path));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("result: FAILED") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify subcommand") {
  auto r = run_cli(kCli, "verify carlitz --m-max 10 --n-max 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("checked: 121\n") != std::string::npos);

  r = run_cli(kCli, "verify generalized --m-max 6 --n-max 6 --q-max 4 --format json");
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["identity"] == "generalized");
  CHECK(j["checked"] == 245);
  CHECK(j["all_zero"] == true);
  CHECK(j["failures"].is_array());
  CHECK(j["failures"].empty());

  CHECK(run_cli(kCli, "verify nosuch").exit_code == 2);
  CHECK(run_cli(kCli, "verify carlitz --m-max -1").exit_code == 2);
  CHECK(run_cli(kCli, "verify").exit_code == 2);
}

TEST_CASE("verify defaults to m, n <= 10 and q <= 4") {
  const auto j = json::parse(run_cli(kCli, "verify generalized --format json").out);
  CHECK(j["checked"] == 11 * 11 * 5);
  CHECK(j["grid"] == "m=0..10 n=0..10 q=0..4");
}

TEST_CASE("verify reports failures from a corrupted cache and exits 1") {
  const std::string path = temp_path("verify_bad.tsv");
  write_file(path, "0\t1/1\n1\t-1/2\n2\t1/5\n3\t0/1\n4\t-1/30\n");
  const auto r = run_cli(kCli, "verify carlitz --m-max 2 --n-max 2 --format json --cache " +
                                   shell_quote(path));
  CHECK(r.exit_code == 1);
  const auto j = json::parse(r.out);
  CHECK(j["all_zero"] == false);
  REQUIRE_FALSE(j["failures"].empty());
  for (const auto& f : j["failures"]) {
    CHECK(f.contains("m"));
    CHECK(f.contains("n"));
    CHECK(f.contains("q"));
    CHECK(fraction_string(f["residual"]));
  }
  std::filesystem::remove(path);
}

TEST_CASE("JSON output is stable across runs") {
  const std::string args = "prove 3 2 2 --format json";
  CHECK(run_cli(kCli, args).out == run_cli(kCli, args).out);
  const std::string v = "verify momiyama --m-max 5 --n-max 5 --format json";
  CHECK(run_cli(kCli, v).out == run_cli(kCli, v + " --threads 1").out);
}

TEST_CASE("bench subcommand") {
  auto r = run_cli(kCli, "bench --n-max 100 --methods recurrence,series --repetitions 2 "
                         "--format json");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["agree"] == true);
  CHECK(j["results"][0]["last_value"] == j["results"][1]["last_value"]);

  r = run_cli(kCli, "bench --n-max 0 --repetitions 1 --format json");
  CHECK(r.exit_code == 0);
  j = json::parse(r.out);
  REQUIRE(j["results"].size() == 3);
  for (const auto& row : j["results"]) CHECK(row["last_value"] == "1/1");

  CHECK(run_cli(kCli, "bench --methods recurrence,newton").exit_code == 2);
  CHECK(run_cli(kCli, "bench --repetitions 0").exit_code == 2);
}

TEST_CASE("bench exits 1 when methods disagree") {
  const auto r = run_cli(kFaultyCli, "bench --n-max 10 --repetitions 1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("cache subcommand round trip") {
  const std::string path = temp_path("roundtrip.tsv");
  std::filesystem::remove(path);
  auto r = run_cli(kCli, "cache save " + shell_quote(path) + " --n-max 40");
  CHECK(r.exit_code == 0);
  const std::string saved = read_file(path);
  CHECK(saved.rfind("0\t1/1\n1\t-1/2\n2\t1/6\n3\t0/1\n", 0) == 0);

  r = run_cli(kCli, "cache load " + shell_quote(path) + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["max_index"] == 40);

  r = run_cli(kCli, "cache info " + shell_quote(path) + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["max_index"] == 40);
  CHECK(read_file(path) == saved);

  // Computation through the saved cache matches a cold computation.
  CHECK(run_cli(kCli, "bernoulli 40 --cache " + shell_quote(path)).out ==
        run_cli(kCli, "bernoulli 40").out);
  std::filesystem::remove(path);
}

TEST_CASE("cache path from BERNOULLI_CACHE") {
  const std::string path = temp_path("env.tsv");
  std::filesystem::remove(path);
  const std::string env = "BERNOULLI_CACHE=" + shell_quote(path);
  CHECK(run_cli(kCli, "cache save --n-max 12", env).exit_code == 0);
  const auto r = run_cli(kCli, "cache info --format json", env);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["max_index"] == 12);
  // --cache wins over the environment
  const std::string other = temp_path("env_other.tsv");
  std::filesystem::remove(other);
  CHECK(run_cli(kCli, "cache save --n-max 3 --cache " + shell_quote(other), env).exit_code == 0);
  CHECK(json::parse(run_cli(kCli, "cache info --format json", env).out)["max_index"] == 12);
  CHECK(json::parse(run_cli(kCli, "cache info --format json --cache " + shell_quote(other), env)
                        .out)["max_index"] == 3);
  std::filesystem::remove(path);
  std::filesystem::remove(other);
}

TEST_CASE("cache rejects malformed files with exit 1") {
  const std::string path = temp_path("bad.tsv");
  write_file(path, "0\t2/1\n");
  CHECK(run_cli(kCli, "cache load " + shell_quote(path)).exit_code == 1);
  write_file(path, "0\t1/1\n1\t-1/2\n2\t1/6\n4\t-1/30\n");
  CHECK(run_cli(kCli, "cache load " + shell_quote(path)).exit_code == 1);
  write_file(path, "0\t1/1\n1\t-1/2\n2\t1/6\n3\t1/2\n");
  CHECK(run_cli(kCli, "cache load " + shell_quote(path)).exit_code == 1);
  CHECK(run_cli(kCli, "cache info " + shell_quote(path)).exit_code == 1);
  CHECK(run_cli(kCli, "bernoulli 3 --cache " + shell_quote(path)).exit_code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("cache I/O and usage errors exit 2") {
  CHECK(run_cli(kCli, "cache load /nonexistent/dir/cache.tsv").exit_code == 2);
  CHECK(run_cli(kCli, "cache save /nonexistent/dir/cache.tsv --n-max 3").exit_code == 2);
  CHECK(run_cli(kCli, "cache save " + shell_quote(temp_path("x.tsv"))).exit_code == 2);
  CHECK(run_cli(kCli, "cache info").exit_code == 2);
  CHECK(run_cli(kCli, "cache frob x").exit_code == 2);
}
