// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end checks of the command-line driver: record contents, exit codes,
// determinism across thread counts, and the output round-trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <string>

#include "doctest.h"
#include "eqsing/parse.hpp"
#include "json.hpp"

#ifndef EQSING_CLI_PATH
#error "EQSING_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(EQSING_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

using Json = nlohmann::ordered_json;

TEST_CASE("invariant subcommands emit pinned records") {
  RunResult r = run("h1 --preset gur1-d6 --format machine");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"alpha\":[6,5],\"degree\":6,\"level\":6,\"h1\":1,\"tau\":20}\n");

  r = run("h1 --alpha 6,5 --level 7 --format machine");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["h1"] == 0);
  CHECK(j["degree"] == 6);

  r = run("tjurina --poly \"x1^3 + x2^4\" --nvars 2 --format machine");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["tjurina"] == 6);
  CHECK(j["determinacy_bound"] == 7);

  r = run("tjurina --preset gur1-d6");
  CHECK(r.code == 0);
  CHECK(r.out == "tjurina = 20\n");

  r = run("castelnuovo --preset gur1-d6 --format machine");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["values"] == Json::array({1, 2, 3, 4, 4, 3, 2, 1}));
  CHECK(j["a"] == 4);
  CHECK(j["t"] == 7);

  r = run("polytope --poly \"x1^6 + x2^5\" --nvars 2 --format machine");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["quasihomogeneous_weights"] == Json::array({"1/6", "1/5"}));
}

TEST_CASE("normal form output and round-trip") {
  RunResult r = run("nf --poly \"x1^2\" --gens \"x1\" --ord lp --nvars 1");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  r = run("nf --poly \"x1^3 + x1*x2^2\" --gens \"x1^2;x2^3\" --ord Ws "
          "--weights 1/2,1/3 --nvars 2 --format machine");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["highest_corner"] == Json::array({1, 2}));
  eqsing::Polynomial back =
      eqsing::parse_polynomial(j["nf"].get<std::string>(), 2);
  CHECK(back.str() == j["nf"].get<std::string>());

  // Local reduction without weights is rejected by the reduction module.
  r = run("nf --poly \"x1\" --gens \"x1\" --ord ls --nvars 1 --format machine");
  CHECK(r.code == 3);
  j = Json::parse(r.out);
  CHECK(j["error"] == "domain");
}

TEST_CASE("stratum records and verdicts") {
  RunResult r = run("stratum --preset qhomn-n4d3 --format machine");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "SmoothNonExpectedDim");
  CHECK(j["tangent_dimension"] == 19);
  CHECK(j["expected_dimension"] == 18);

  r = run("stratum --preset gur1-d6 --format machine");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["verdict"] == "NonReducedDouble");
  CHECK(j["quadratic_rank"] == 1);
  CHECK(j["rank_linear_total"] == 19);

  r = run("stratum --preset gur1-d6 --emit certificates");
  CHECK(r.code == 0);
  CHECK(!r.out.empty());

  RunResult again = run("stratum --preset gur1-d6 --format machine");
  CHECK(again.out == run("stratum --preset gur1-d6 --format machine").out);
}

TEST_CASE("stabilize records and the certificate exit code") {
  RunResult r = run("stabilize --preset gur1-d6 --squares 1 --format machine");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["suspended_alpha"] == Json::array({6, 5, 2}));
  CHECK(j["tau"] == 20);
  CHECK(j["h1"] == 1);
  CHECK(j["block_ranks"] == Json::array({1, 14}));
  CHECK(j["combined_quadratic_rank"] == 15);

  r = run("stabilize --preset gur1-d6 --squares 2 --emit certificate "
          "--format machine");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["found"] == true);
  CHECK(j["jacobian_rank"] == 20);
  CHECK(j["minor"] != "0");

  // One square cannot carry the witness construction: a domain error.
  r = run("stabilize --preset gur1-d6 --squares 1 --emit certificate "
          "--format machine");
  CHECK(r.code == 3);
}

TEST_CASE("sweep is deterministic across worker counts") {
  RunResult one = run("sweep --nvars 2 --sum-max 12 --jobs 1 --format machine");
  RunResult four = run("sweep --nvars 2 --sum-max 12 --jobs 4 --format machine");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(!one.out.empty());

  // Every line is a standalone record.
  std::size_t start = 0;
  int records = 0;
  while (start < one.out.size()) {
    std::size_t end = one.out.find('\n', start);
    REQUIRE(end != std::string::npos);
    Json j = Json::parse(one.out.substr(start, end - start));
    CHECK(j.contains("tau"));
    start = end + 1;
    ++records;
  }
  CHECK(records > 3);
}

TEST_CASE("exit codes distinguish error classes") {
  CHECK(run("h1 --preset bogus").code == 2);
  CHECK(run("h1 --alpha 1,5").code == 3);
  CHECK(run("tjurina --poly \"x1 +* x2\" --nvars 2").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("h1").code == 2);

  RunResult r = run("h1 --preset bogus --format machine");
  Json j = Json::parse(r.out);
  CHECK(j["error"] == "parse");
}

TEST_CASE("preset listing and the parameter cap flag") {
  RunResult r = run("presets --format machine");
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 9);
  CHECK(r.out.find("gur1-d6") != std::string::npos);

  RunResult flag = run("stratum --preset gur1-d6 --param-cap 2 --format machine");
  CHECK(flag.code == 0);
  CHECK(Json::parse(flag.out)["verdict"] == "NonReducedDouble");
}
