// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "eqsing/io.hpp"
#include "eqsing/parse.hpp"

using namespace eqsing;

TEST_CASE("presets resolve to pinned specs") {
  CHECK(presets().size() == 9);
  std::set<std::string> names;
  for (const auto& p : presets()) {
    names.insert(p.name);
    SingularitySpec s = SingularitySpec::make(p.alpha, p.degree);
    CHECK(s.d == p.degree);
  }
  CHECK(names.size() == 9);

  const Preset* g = find_preset("gur1-d6");
  REQUIRE(g != nullptr);
  CHECK(g->alpha == std::vector<int>{6, 5});
  CHECK(g->degree == 6);
  CHECK(find_preset("gur1-d9") == nullptr);

  SingularitySpec s = preset_spec("case2-n2d9");
  CHECK(s.alpha == std::vector<int>{10, 4});
  CHECK(s.d == 9);
  CHECK(derivation_case_of(s) == DerivationCase::Chained);

  CHECK(preset_spec("synth-d4").d == 4);
  CHECK_THROWS_AS(preset_spec("nope"), DomainError);
}

TEST_CASE("spec and invariant records") {
  SingularitySpec spec = preset_spec("gur1-d6");
  CHECK(spec_json(spec).dump() == R"({"alpha":[6,5],"degree":6})");

  Json inv = invariants_json(spec);
  CHECK(inv["milnor"] == 20);
  CHECK(inv["tau"] == 20);
  CHECK(inv["h1"] == 1);
  CHECK(inv["expected_dimension"] == 7);
  CHECK(inv["case"] == "direct");

  // Identical input gives byte-identical machine output.
  CHECK(inv.dump() == invariants_json(preset_spec("gur1-d6")).dump());

  SingularitySpec with_lambda = SingularitySpec::make({6, 5}, 6, {Q(0), Q(1, 2)});
  Json jl = spec_json(with_lambda);
  REQUIRE(jl.contains("lambda"));
  CHECK(jl["lambda"][1] == "1/2");
}

TEST_CASE("castelnuovo and polytope records") {
  SingularitySpec spec = preset_spec("gur1-d6");
  Json c = castelnuovo_json(castelnuovo_profile(spec));
  CHECK(c["k_first"] == 0);
  CHECK(c["values"] == Json::array({1, 2, 3, 4, 4, 3, 2, 1}));
  CHECK(c["a"] == 4);
  CHECK(c["t"] == 7);

  Json p = polytope_json(newton_polytope(canonical_polynomial(spec)));
  REQUIRE(p["vertices"].size() == 2);
  REQUIRE(!p["quasihomogeneous_weights"].is_null());
  CHECK(p["quasihomogeneous_weights"] == Json::array({"1/6", "1/5"}));

  // x1^2 + x1*x2 + x2^3 is not quasihomogeneous: no single weight line.
  Polynomial f = parse_polynomial("x1^2 + x1*x2 + x2^3", 2);
  Json q = polytope_json(newton_polytope(f));
  CHECK(q["quasihomogeneous_weights"].is_null());
}

TEST_CASE("flat emission re-parses to an equal value") {
  auto table = std::make_shared<ParamTable>();
  ParamPolynomial f = parse_param_polynomial(
      "x1^2 + 2/3*a[1,2]*x1*x2^2 - a[1,2]^2 - 1/2*a[2,0]*a[1,2]*x1", 2, table, -1);
  std::string flat = flat_param_str(f);
  CHECK(flat.find('(') == std::string::npos);
  ParamPolynomial back = parse_param_polynomial(flat, 2, table, -1);
  back -= f;
  CHECK(back.is_zero());

  // A derived equation row round-trips through the parser as well.
  EquationSystem sys = derive_case1(preset_spec("gur1-d6"), 3);
  REQUIRE(!sys.equations.empty());
  const PPoly& row = sys.equations.front().full;
  ParamPolynomial parsed =
      parse_param_polynomial(row.str(*sys.table), 2, sys.table, -1);
  PPoly diff = parsed.coeff(Exponent(2)) - row;
  CHECK(diff.is_zero());

  ParamPolynomial zero(2, table, -1);
  CHECK(flat_param_str(zero) == "0");
}

TEST_CASE("system and classification records") {
  EquationSystem sys = derive_case1(preset_spec("gur1-d6"), 3);
  Json js = system_json(sys, false);
  CHECK(js["case"] == "direct");
  CHECK(js["slots"] == 9);
  CHECK(js["virtual_rows"] == 13);
  CHECK(js["last_equation"]["quadratic_rank"] == 1);
  REQUIRE(js["last_equation"]["pairing"].size() == 1);
  CHECK(js["last_equation"]["pairing"][0]["slot_a"] == Json::array({2, 4}));
  CHECK(js["last_equation"]["pairing"][0]["slot_b"] == Json::array({2, 4}));
  CHECK(!js.contains("equations"));

  Json full = system_json(sys, true);
  REQUIRE(full.contains("equations"));
  CHECK(full["equations"].size() == sys.equations.size());
  bool saw_last = false;
  for (const auto& row : full["equations"])
    saw_last = saw_last || row["role"] == "last";
  CHECK(saw_last);

  StratumClassification cls = classify_stratum(preset_spec("qhomn-n4d3"), 3);
  Json jc = classification_json(cls);
  CHECK(jc["verdict"] == "SmoothNonExpectedDim");
  CHECK(jc["tangent_dimension"] == 19);
  CHECK(jc["expected_dimension"] == 18);
  CHECK(jc["tau"] == 16);
  CHECK(jc["h1"] == 1);
}

TEST_CASE("suspension and witness records") {
  SuspendedSystem s1 = derive_suspended_system(
      SuspensionSpec::make(preset_spec("gur1-d6"), 1));
  Json j1 = suspended_json(s1);
  CHECK(j1["tau"] == 20);
  CHECK(j1["h1"] == 1);
  CHECK(j1["rank_linear_total"] == 19);
  CHECK(j1["block_ranks"] == Json::array({1, 14}));
  CHECK(j1["combined_quadratic_rank"] == 15);
  CHECK(j1["suspended_alpha"] == Json::array({6, 5, 2}));

  SuspendedSystem s2 = derive_suspended_system(
      SuspensionSpec::make(preset_spec("gur1-d6"), 2));
  WitnessCertificate w = witness_reduced_component(s2);
  Json jw = witness_json(w, *s2.sys.table);
  CHECK(jw["found"] == true);
  CHECK(jw["jacobian_rank"] == 20);
  CHECK(jw["slot_k"] == "a[4,1,1,0]");
  REQUIRE(jw["point"].size() == 1);
  for (const auto& [k, v] : jw["point"].items()) {
    CHECK(k == "a[4,1,1,0]");
    CHECK(v.get<std::string>() != "0");
  }
  CHECK(jw["minor"].get<std::string>() != "0");
  CHECK(jw["note"].get<std::string>().find("reduced") != std::string::npos);
}

TEST_CASE("alpha grid enumerates descending tuples") {
  auto g2 = canonical_alpha_grid(2, 7);
  std::vector<std::vector<int>> want2 = {{2, 2}, {3, 2}, {3, 3},
                                         {4, 2}, {4, 3}, {5, 2}};
  CHECK(g2 == want2);

  auto g3 = canonical_alpha_grid(3, 8);
  std::vector<std::vector<int>> want3 = {{2, 2, 2}, {3, 2, 2}, {3, 3, 2},
                                         {4, 2, 2}};
  CHECK(g3 == want3);

  for (const auto& a : canonical_alpha_grid(4, 24)) {
    long sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] >= 2);
      if (i) CHECK(a[i] <= a[i - 1]);
      sum += a[i];
    }
    CHECK(sum <= 24);
  }
  auto g4 = canonical_alpha_grid(4, 10);
  std::vector<std::vector<int>> want4 = {
      {2, 2, 2, 2}, {3, 2, 2, 2}, {3, 3, 2, 2}, {4, 2, 2, 2}};
  CHECK(g4 == want4);
  CHECK_THROWS_AS(canonical_alpha_grid(0, 5), DomainError);
}
