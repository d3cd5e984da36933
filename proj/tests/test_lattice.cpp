// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "eqsing/lattice.hpp"
#include "eqsing/localsing.hpp"

using namespace eqsing;

namespace {
Exponent E(std::vector<int32_t> v) { return Exponent(std::move(v)); }
}  // namespace

TEST_CASE("cohomology dimensions of the canonical scheme") {
  SingularitySpec s = SingularitySpec::make({6, 5});
  std::vector<long> expected = {20, 19, 17, 14, 10, 6, 3, 1, 0};
  for (long k = -1; k <= 7; ++k) CHECK(h1(s, k) == expected[k + 1]);

  CHECK(h0(s, 3) == 0);
  CHECK(h0(s, 4) == 1);  // 15 monomials, 14 conditions
  CHECK(h0(s, -1) == 0);

  CHECK(h1(SingularitySpec::make({4, 4, 4}), 5) == 1);
  CHECK(h1(SingularitySpec::make({3, 3, 3, 3}), 3) == 1);
  CHECK(h1(SingularitySpec::make({10, 4}), 9) == 1);

  CHECK(expected_dimension(s) == 7);
  CHECK(expected_dimension(SingularitySpec::make({4, 4, 4})) == 28);
  CHECK(expected_dimension(SingularitySpec::make({3, 3, 3, 3})) == 18);
  CHECK(expected_dimension(SingularitySpec::make({10, 4})) == 27);
}

TEST_CASE("castelnuovo profile of the canonical scheme") {
  CastelnuovoProfile p = castelnuovo_profile(SingularitySpec::make({6, 5}));
  CHECK(p.k_first == 0);
  CHECK(p.values == std::vector<long>{1, 2, 3, 4, 4, 3, 2, 1});
  REQUIRE(p.a.has_value());
  CHECK(*p.a == 4);
  REQUIRE(p.t.has_value());
  CHECK(*p.t == 7);
  CHECK(p.value_at(3) == 4);
  CHECK(p.value_at(8) == 0);
  CHECK(p.value_at(-1) == 0);
}

TEST_CASE("castelnuovo profile from a raw sequence") {
  CastelnuovoProfile p = castelnuovo_profile({5, 2, 0}, 2);
  CHECK(p.k_first == 3);
  CHECK(p.values == std::vector<long>{3, 2});
  REQUIRE(p.t.has_value());
  CHECK(*p.t == 4);
  CHECK_FALSE(p.a.has_value());

  CHECK_FALSE(castelnuovo_profile({3, 1}, 0).t.has_value());
  CHECK_THROWS_AS(castelnuovo_profile({1, 2, 0}, 0), InvalidProfile);
}

TEST_CASE("davis bounds for monomial complete intersections") {
  CHECK(davis_check(3, 2));
  CHECK(davis_check(5, 3));
  CHECK(davis_check(4, 4));
  CHECK(davis_check(7, 1));
  CHECK_THROWS_AS(davis_check(3, 4), DomainError);
  CHECK_THROWS_AS(davis_check(0, 0), DomainError);
}

TEST_CASE("family index set for (6,5)") {
  SingularitySpec s = SingularitySpec::make({6, 5});
  CHECK(excluded_from_family(E({6, 0}), s));  // pure power
  CHECK(excluded_from_family(E({0, 5}), s));
  CHECK(excluded_from_family(E({5, 1}), s));  // near-pure
  CHECK(excluded_from_family(E({1, 4}), s));
  CHECK_FALSE(excluded_from_family(E({5, 0}), s));
  CHECK_FALSE(excluded_from_family(E({4, 2}), s));

  std::vector<Exponent> slots = family_slots(s);
  std::vector<Exponent> want = {E({2, 3}), E({3, 2}), E({4, 1}), E({5, 0}),
                                E({0, 6}), E({1, 5}), E({2, 4}), E({3, 3}),
                                E({4, 2})};
  CHECK(slots == want);
}

TEST_CASE("family index set sizes") {
  CHECK(family_slots(SingularitySpec::make({10, 4})).size() == 43);
  CHECK(family_slots(SingularitySpec::make({4, 4, 4})).size() == 27);
  std::vector<Exponent> tiny = family_slots(SingularitySpec::make({3, 3, 3, 3}));
  std::vector<Exponent> want = {E({0, 1, 1, 1}), E({1, 0, 1, 1}),
                                E({1, 1, 0, 1}), E({1, 1, 1, 0})};
  CHECK(tiny == want);
}

TEST_CASE("edge monomials and their duals") {
  SingularitySpec s65 = SingularitySpec::make({6, 5});
  CHECK(edge_set(s65) == std::vector<Exponent>{E({2, 4})});
  REQUIRE(edge_coordinate(E({2, 4}), s65).has_value());
  CHECK(*edge_coordinate(E({2, 4}), s65) == 1);
  CHECK_FALSE(edge_coordinate(E({5, 0}), s65).has_value());  // pure slot
  CHECK_FALSE(edge_coordinate(E({3, 3}), s65).has_value());
  CHECK(dual_edge(E({2, 4}), s65) == E({2, 4}));
  CHECK_THROWS_AS(dual_edge(E({3, 3}), s65), DomainError);

  SingularitySpec s104 = SingularitySpec::make({10, 4});
  std::vector<Exponent> edges104 = {E({2, 3}), E({3, 3}), E({4, 3}),
                                    E({5, 3}), E({6, 3})};
  CHECK(edge_set(s104) == edges104);
  CHECK(dual_edge(E({2, 3}), s104) == E({6, 3}));
  CHECK(dual_edge(E({3, 3}), s104) == E({5, 3}));
  CHECK(dual_edge(E({4, 3}), s104) == E({4, 3}));
  for (const Exponent& e : edges104)
    CHECK(dual_edge(dual_edge(e, s104), s104) == e);  // involution

  SingularitySpec s444 = SingularitySpec::make({4, 4, 4});
  std::vector<Exponent> edges444 = edge_set(s444);
  CHECK(edges444.size() == 9);
  CHECK(dual_edge(E({3, 2, 0}), s444) == E({3, 0, 2}));
  CHECK(dual_edge(E({1, 1, 3}), s444) == E({1, 1, 3}));
  for (const Exponent& e : edges444) {
    Exponent d = dual_edge(e, s444);
    CHECK(std::find(edges444.begin(), edges444.end(), d) != edges444.end());
    CHECK(dual_edge(d, s444) == e);
  }

  // Two coordinates at alpha - 1 disqualify a slot.
  SingularitySpec s66 = SingularitySpec::make({6, 6}, 10);
  CHECK_FALSE(edge_coordinate(E({5, 5}), s66).has_value());
}

TEST_CASE("lattice point helpers") {
  auto box = detail::box_points({2, 1});
  CHECK(box.size() == 6);
  CHECK(box.front() == E({0, 0}));
  CHECK(detail::monomial_count(2, 6) == 28);
  CHECK(detail::monomial_count(3, 5) == 56);
  CHECK(detail::monomial_count(4, 3) == 35);
  auto pts = detail::degree_points(3, 2);
  CHECK(pts.size() == 6);
  CHECK(pts.front() == E({0, 0, 2}));
  CHECK(pts.back() == E({2, 0, 0}));
  CHECK(std::is_sorted(pts.begin(), pts.end(), CanonicalLess{}));
}
