// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqsing/stabilize.hpp"

using namespace eqsing;

namespace {

Exponent E(std::vector<int> v) { return Exponent(v); }

// Unordered slot-pair key for comparing quadratic supports.
std::string pair_key(const Exponent& a, const Exponent& b) {
  std::string sa = a.str(), sb = b.str();
  return sa < sb ? sa + sb : sb + sa;
}

}  // namespace

TEST_CASE("suspension spec and the suspended germ") {
  SingularitySpec base = SingularitySpec::make({6, 5});
  SuspensionSpec sp = SuspensionSpec::make(base, 2);
  CHECK(sp.m == 2);
  CHECK(sp.d == 6);

  SingularitySpec s = sp.suspended();
  CHECK(s.alpha == std::vector<int>{6, 5, 2, 2});
  CHECK(s.d == 6);
  CHECK(milnor_number(s) == 20);

  // Adding squares keeps the Tjurina number of the germ itself.
  Polynomial f = sp.suspended_polynomial();
  CHECK(f.terms().size() == 4);
  CHECK(tjurina_number(f) == 20);

  // The unisingular variant carries each square coordinate up to degree d.
  SuspensionSpec spu = SuspensionSpec::make(base, 2, std::nullopt, true);
  Polynomial fu = spu.suspended_polynomial();
  CHECK(fu.terms().size() == 6);
  CHECK(tjurina_number(fu) == 20);

  // No squares degenerates to the base spec.
  SuspensionSpec sp0 = SuspensionSpec::make(base, 0);
  CHECK(sp0.suspended().alpha == base.alpha);
  CHECK(sp0.suspended().d == base.d);

  CHECK_THROWS_AS(SuspensionSpec::make(base, -1), DomainError);
  CHECK_THROWS_AS(SuspensionSpec::make(base, 1, 2L), DomainError);
}

TEST_CASE("mixed-term elimination completes the square on one slot") {
  auto table = std::make_shared<ParamTable>();
  uint32_t a = table->intern(E({2, 1, 1}));
  ParamPolynomial F(3, table, -1);
  F.add(E({0, 0, 2}), PPoly::constant(1));
  F.add(E({6, 0, 0}), PPoly::constant(1));
  F.add(E({0, 5, 0}), PPoly::constant(1));
  F.add(E({2, 1, 1}), PPoly::var(a));

  MixedElimination me = eliminate_mixed_terms(F, 12);
  REQUIRE(me.changes.size() == 1);
  CHECK(me.changes[0].kind == CoordChange::Kind::Substitution);
  CHECK(me.changes[0].var == 2);
  CHECK(me.changes[0].monomial == E({2, 1, 0}));
  CHECK(me.changes[0].coefficient == PPoly::var(a) * Q(-1, 2));

  CHECK(me.transformed.coeff(E({2, 1, 1})).is_zero());
  PPoly want = PPoly::var(a).mul(PPoly::var(a), -1) * Q(-1, 4);
  CHECK(me.transformed.coeff(E({4, 2, 0})) == want);

  REQUIRE(me.new_from_old.count(E({4, 2, 0})) == 1);
  CHECK(me.new_from_old.at(E({4, 2, 0})) == want);
  CHECK(me.new_from_old.count(E({6, 0, 0})) == 1);
  CHECK(me.new_from_old.count(E({0, 5, 0})) == 1);
  for (const auto& [e, c] : me.new_from_old) CHECK(e[2] == 0);

  // A second pass has nothing left to remove.
  MixedElimination me2 = eliminate_mixed_terms(me.transformed, 12);
  CHECK(me2.changes.empty());
  ParamPolynomial diff = me2.transformed;
  diff -= me.transformed;
  CHECK(diff.is_zero());
}

TEST_CASE("mixed-term elimination rejects unnormalized input") {
  auto table = std::make_shared<ParamTable>();
  {
    ParamPolynomial F(3, table, -1);
    F.add(E({0, 0, 2}), PPoly::constant(2));
    CHECK_THROWS_AS(eliminate_mixed_terms(F, 8), DomainError);
  }
  {
    ParamPolynomial F(3, table, -1);
    CHECK_THROWS_AS(eliminate_mixed_terms(F, 8), DomainError);
  }
  {
    ParamPolynomial F(3, table, -1);
    F.add(E({0, 0, 2}), PPoly::constant(1));
    F.add(E({1, 0, 0}), PPoly::constant(1));
    CHECK_THROWS_AS(eliminate_mixed_terms(F, 8), DomainError);
  }
}

TEST_CASE("layered closed form of the eliminated coefficients") {
  // Layer-0 and layer-1 slots feed the quadratic correction; a layer-2 slot
  // only enters from parameter degree three on.
  auto table = std::make_shared<ParamTable>();
  uint32_t A20 = table->intern(E({2, 0, 0}));
  uint32_t A21 = table->intern(E({2, 1, 0}));
  uint32_t B10 = table->intern(E({1, 0, 1}));
  uint32_t B11 = table->intern(E({1, 1, 1}));
  uint32_t B20 = table->intern(E({2, 0, 1}));
  uint32_t B02 = table->intern(E({0, 2, 1}));
  uint32_t C11 = table->intern(E({1, 1, 2}));

  ParamPolynomial F(3, table, -1);
  F.add(E({0, 0, 2}), PPoly::constant(1));
  F.add(E({8, 0, 0}), PPoly::constant(1));
  F.add(E({0, 8, 0}), PPoly::constant(1));
  F.add(E({2, 0, 0}), PPoly::var(A20));
  F.add(E({2, 1, 0}), PPoly::var(A21));
  F.add(E({1, 0, 1}), PPoly::var(B10));
  F.add(E({1, 1, 1}), PPoly::var(B11));
  F.add(E({2, 0, 1}), PPoly::var(B20));
  F.add(E({0, 2, 1}), PPoly::var(B02));
  F.add(E({1, 1, 2}), PPoly::var(C11));

  MixedElimination me = eliminate_mixed_terms(F, 10);

  // Targets are cleared in ascending (degree, lex) order. The layer-2 slot
  // keeps feeding new mixed terms shifted by its x-part, so the closure of
  // the four original targets under +(1,1) fills the degree window: one
  // chain of period two from (1,0) and three of period two from the
  // degree-three targets, 17 kills in all.
  REQUIRE(me.changes.size() == 17);
  CHECK(me.changes[0].monomial == E({1, 0, 0}));
  CHECK(me.changes[1].monomial == E({0, 2, 0}));
  CHECK(me.changes[2].monomial == E({1, 1, 0}));
  CHECK(me.changes[3].monomial == E({2, 0, 0}));
  CHECK(me.changes[4].monomial == E({2, 1, 0}));
  CHECK(me.changes[16].monomial == E({5, 4, 0}));
  for (const auto& [e, c] : me.transformed.coeffs()) CHECK(e[2] != 1);

  auto prod = [](uint32_t x, uint32_t y) {
    return PPoly::var(x).mul(PPoly::var(y), -1);
  };
  // a'_{I} = a_I - (1/2) sum_{J+K=I} a_J a_K - (1/4) a_{I/2}^2 + phi, with
  // phi of parameter degree at least three.
  CHECK(me.new_from_old.at(E({2, 1, 0})).truncated(2) ==
        PPoly::var(A21) + prod(B11, B10) * Q(-1, 2));
  CHECK(me.new_from_old.at(E({2, 0, 0})).truncated(2) ==
        PPoly::var(A20) + prod(B10, B10) * Q(-1, 4));
  CHECK(me.new_from_old.at(E({4, 0, 0})).truncated(2) == prod(B20, B20) * Q(-1, 4));
  CHECK(me.new_from_old.at(E({2, 2, 0})).truncated(2) ==
        prod(B20, B02) * Q(-1, 2) + prod(B11, B11) * Q(-1, 4));
  CHECK(me.new_from_old.at(E({3, 1, 0})).truncated(2) ==
        prod(B20, B11) * Q(-1, 2));
  CHECK(me.transformed.coeff(E({1, 1, 0})).is_zero());

  // No pair of original mixed slots splits (4,1), so everything landing
  // there comes from the layer-2 cascade and is cubic or beyond.
  PPoly c41 = me.transformed.coeff(E({4, 1, 0}));
  CHECK(c41.truncated(2).is_zero());
  if (!c41.is_zero()) CHECK(c41.min_degree() >= 3);
}

TEST_CASE("one added square rebuilds the base obstruction") {
  SuspensionSpec sp = SuspensionSpec::make(SingularitySpec::make({6, 5}), 1);
  SuspendedSystem ss = derive_suspended_system(sp);

  CHECK(ss.tau == 20);
  CHECK(ss.h1 == 1);
  CHECK(ss.rank_linear_total == 19);
  CHECK(ss.sys.derivation_case == DerivationCase::Chained);
  CHECK(ss.sys.virtual_rows.size() == 1);
  CHECK(ss.sys.rows_basis_low == 14);
  CHECK(ss.sys.rows_pure_sub == 2);
  CHECK(ss.sys.rows_basis_above == 2);
  CHECK(ss.sys.edge_slots.size() == 15);

  REQUIRE(ss.block_ranks.size() == 2);
  CHECK(ss.block_ranks[0] == 1);
  CHECK(ss.block_ranks[1] == 14);
  CHECK(combined_quadratic_rank(ss) == 15);
  CHECK(ss.sys.last.quadratic_rank == 15);
  CHECK(ss.sys.last.linear_part_zero);
  CHECK(ss.sys.last.pairing_matches_dual_structure);
  CHECK(ss.sys.last.all_pair_coefficients_positive);

  // No pairing term mixes two square blocks, and the x-only block is spanned
  // by the base obstruction pair alone.
  int base_block_terms = 0;
  for (const auto& pr : ss.sys.last.pairing) {
    int ba = square_block_of(pr.slot_a, 2, 1);
    int bb = square_block_of(pr.slot_b, 2, 1);
    CHECK(ba >= 0);
    CHECK(ba == bb);
    if (ba == 0) {
      ++base_block_terms;
      CHECK(pr.slot_a == E({2, 4, 0}));
      CHECK(pr.slot_b == E({2, 4, 0}));
    }
  }
  CHECK(base_block_terms == 1);

  // One square is not enough for the reduced-component certificate.
  CHECK_THROWS_AS(witness_reduced_component(ss), DomainError);

  // m = 0 degenerates to the plain stratum system of the base.
  SuspendedSystem s0 =
      derive_suspended_system(SuspensionSpec::make(SingularitySpec::make({6, 5}), 0));
  CHECK(s0.tau == 20);
  CHECK(s0.h1 == 1);
  CHECK(s0.rank_linear_total == 19);
  CHECK(s0.sys.derivation_case == DerivationCase::Direct);
  CHECK(s0.sys.edge_slots.size() == 1);
  REQUIRE(s0.block_ranks.size() == 1);
  CHECK(s0.block_ranks[0] == 1);
  CHECK(combined_quadratic_rank(s0) == 1);
}

TEST_CASE("suspension in the direct regime") {
  SuspensionSpec sp = SuspensionSpec::make(SingularitySpec::make({3, 3, 3, 3}), 1);
  SuspendedSystem ss = derive_suspended_system(sp);

  CHECK(ss.tau == 16);
  CHECK(ss.h1 == 1);
  CHECK(ss.rank_linear_total == 15);
  CHECK(ss.sys.derivation_case == DerivationCase::Direct);
  CHECK(ss.sys.virtual_rows.size() == 1);
  CHECK(ss.sys.rows_basis_low == 10);
  CHECK(ss.sys.rows_pure_sub == 4);
  CHECK(ss.sys.rows_basis_above == 0);
  CHECK(ss.sys.edge_slots.size() == 6);

  // The base obstruction monomial x1*x2*x3*x4 exceeds the ambient degree, so
  // the whole quadratic lives in the square block.
  REQUIRE(ss.block_ranks.size() == 2);
  CHECK(ss.block_ranks[0] == 0);
  CHECK(ss.block_ranks[1] == 6);
  CHECK(combined_quadratic_rank(ss) == 6);
  CHECK(ss.sys.last.pairing_matches_dual_structure);
  CHECK(ss.sys.last.all_pair_coefficients_positive);
}

TEST_CASE("two added squares certify a reduced component") {
  SuspensionSpec sp = SuspensionSpec::make(SingularitySpec::make({6, 5}), 2);
  SuspendedSystem ss = derive_suspended_system(sp);

  CHECK(ss.tau == 20);
  CHECK(ss.h1 == 1);
  CHECK(ss.rank_linear_total == 19);
  CHECK(ss.sys.edge_slots.size() == 29);
  REQUIRE(ss.block_ranks.size() == 3);
  CHECK(ss.block_ranks == std::vector<long>{1, 14, 14});
  CHECK(ss.block_ranks[1] == ss.block_ranks[2]);
  CHECK(combined_quadratic_rank(ss) == 29);
  CHECK(ss.sys.last.quadratic_rank == 29);
  for (const auto& pr : ss.sys.last.pairing) {
    int ba = square_block_of(pr.slot_a, 2, 2);
    CHECK(ba >= 0);
    CHECK(ba == square_block_of(pr.slot_b, 2, 2));
  }

  WitnessCertificate w = witness_reduced_component(ss);
  REQUIRE(w.found);
  CHECK(w.special == E({4, 3, 0, 0}));
  CHECK(w.J == E({0, 2, 0, 0}));
  CHECK(w.K == E({4, 1, 0, 0}));
  CHECK(w.slot_J == E({0, 2, 1, 0}));
  CHECK(w.slot_K == E({4, 1, 1, 0}));
  CHECK(w.jacobian_rank == 20);
  CHECK(!w.note.empty());

  // The point charges the dual partner of slot_J and nothing else, so the
  // distinguished minor is the pairing coefficient times that value.
  REQUIRE(w.point.size() == 1);
  uint32_t idK = ss.sys.table->id_of(w.slot_K);
  REQUIRE(w.point.count(idK) == 1);
  Q s = w.point.at(idK);
  CHECK(s != 0);
  Q cpair(0);
  for (const auto& pr : ss.sys.last.pairing)
    if ((pr.slot_a == w.slot_J && pr.slot_b == w.slot_K) ||
        (pr.slot_a == w.slot_K && pr.slot_b == w.slot_J))
      cpair = pr.coefficient;
  REQUIRE(cpair != 0);
  CHECK(w.minor_value == cpair * s);
}

TEST_CASE("suspension preserves the local invariants") {
  auto [h1a, taua] =
      check_h1_tau_preserved(SuspensionSpec::make(SingularitySpec::make({6, 5}), 1));
  CHECK(h1a == 1);
  CHECK(taua == 20);

  auto [h1b, taub] = check_h1_tau_preserved(
      SuspensionSpec::make(SingularitySpec::make({3, 3, 3, 3}), 1));
  CHECK(h1b == 1);
  CHECK(taub == 16);
}

TEST_CASE("plane-curve bound at twice the degree minus four") {
  CHECK(check_curve_2dminus4(6, 5));
  CHECK(check_curve_2dminus4(5, 5));
  CHECK(check_curve_2dminus4(2, 2));
  CHECK(check_curve_2dminus4(9, 2));
  CHECK(check_curve_2dminus4(6, 5, 7L));
  CHECK_FALSE(check_curve_2dminus4(6, 2));
}

TEST_CASE("square elimination composed with the depth-one base system") {
  // Route one: the base stratum system at level tau + 1 = 21, where the
  // obstruction vanishes and every box row is solvable.
  SingularitySpec base = SingularitySpec::make({6, 5}, 21);
  EquationSystem bsys = derive_case1(base, 3);
  CHECK(bsys.virtual_rows.size() == 13);
  CHECK(bsys.rows_basis_low == 3);
  CHECK(bsys.rows_pure_sub == 1);
  CHECK(bsys.rows_basis_above == 2);

  // The corner row is always kept as the closing equation; one level above
  // tau its linear pivot is still alive, so the stratum is smooth there.
  REQUIRE(bsys.last.present);
  CHECK(!bsys.last.linear_part_zero);
  const StratumEquation* corner = nullptr;
  for (const auto& eq : bsys.equations)
    if (eq.is_last) corner = &eq;
  REQUIRE(corner != nullptr);
  // One level above tau the corner row keeps a lone diagonal pivot whose
  // scale depends on the reduction normalization; composition kills it.
  auto clin = detail::linear_part(corner->full);
  REQUIRE(clin.size() == 1);
  CHECK(clin.begin()->first == bsys.table->id_of(E({4, 3})));
  const Q piv = clin.begin()->second;
  REQUIRE(piv != 0);
  auto cquad = detail::quadratic_part(corner->full);
  REQUIRE(cquad.size() == 1);
  const Q base_pair = cquad.begin()->second;
  REQUIRE(base_pair != 0);

  // Route two: eliminate the square-linear layer of the suspended family at
  // the native degree and read off the coefficient map.
  SingularitySpec susp = SingularitySpec::make({6, 5, 2});
  REQUIRE(susp.d == 6);
  ParamPolynomial F = build_generic_family(susp, 3);
  MixedElimination me = eliminate_mixed_terms(F, 12);
  const ParamTable& stab = *F.table();

  auto expr_of = [&](const Exponent& I) -> PPoly {
    auto it = me.new_from_old.find(I.extended(3));
    return it == me.new_from_old.end() ? PPoly() : it->second;
  };
  auto compose = [&](const PPoly& row) -> PPoly {
    PPoly out;
    for (const auto& [mono, c] : row.terms()) {
      PPoly t = PPoly::constant(c);
      for (const auto& [id, e] : mono.factors) {
        PPoly v = expr_of(bsys.table->slot(id));
        for (uint32_t k = 0; k < e && !t.is_zero(); ++k) t = t.mul(v, 2);
      }
      out += t;
    }
    return out;
  };

  // Former virtual rows of degree 2..4 become rows with fresh diagonal
  // pivots; the constant row stays trivial.
  std::vector<std::vector<Q>> lin;
  auto push_linear = [&](const PPoly& row) {
    auto lp = detail::linear_part(row);
    REQUIRE(!lp.empty());
    std::vector<Q> r(stab.size(), Q(0));
    for (const auto& [id, c] : lp) r[id] = c;
    lin.push_back(std::move(r));
  };
  int alive = 0;
  for (const Exponent& V : bsys.virtual_rows) {
    PPoly row = expr_of(V);
    if (V.degree() == 0) {
      CHECK(row.is_zero());
      continue;
    }
    auto lp = detail::linear_part(row);
    REQUIRE(lp.size() == 1);
    CHECK(lp.begin()->first == stab.id_of(V.extended(3)));
    CHECK(lp.begin()->second == 1);
    push_linear(row);
    ++alive;
  }
  CHECK(alive == 12);

  PPoly corner_row;
  for (const auto& eq : bsys.equations) {
    PPoly row = compose(eq.full);
    if (eq.is_last) {
      corner_row = row;
      continue;
    }
    push_linear(row);
  }
  REQUIRE(lin.size() == 18);
  CHECK(rank_exact(lin) == 18);

  // The composed corner row loses its linear part: the suspended family has
  // no degree-7 slot. What is left is the block-diagonal pairing quadric.
  REQUIRE(!corner_row.is_zero());
  CHECK(detail::linear_part(corner_row).empty());
  auto quad = detail::quadratic_part(corner_row);
  std::vector<long> blocks = quadratic_block_ranks(quad, stab, 2, 1);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == 1);
  CHECK(blocks[1] == 14);

  // The x-only block is the square of the base obstruction slot, inherited
  // with its original coefficient; the square block pairs the seven
  // complementary splits of the corner exponent, each scaled by the
  // completed-square factor -1/2 times the corner pivot.
  int base_terms = 0;
  std::set<std::string> got;
  for (const auto& [ij, c] : quad) {
    Exponent sa = stab.slot(ij.first), sb = stab.slot(ij.second);
    if (square_block_of(sa, 2, 1) == 0) {
      ++base_terms;
      CHECK(sa == E({2, 4, 0}));
      CHECK(ij.first == ij.second);
      CHECK(c == base_pair);
    } else {
      CHECK(c == piv * Q(-1, 2));
      got.insert(pair_key(sa, sb));
    }
  }
  CHECK(base_terms == 1);
  std::set<std::string> want;
  auto add_pair = [&](Exponent x, Exponent y) { want.insert(pair_key(x, y)); };
  add_pair(E({2, 0, 1}), E({2, 3, 1}));
  add_pair(E({3, 0, 1}), E({1, 3, 1}));
  add_pair(E({4, 0, 1}), E({0, 3, 1}));
  add_pair(E({0, 2, 1}), E({4, 1, 1}));
  add_pair(E({1, 1, 1}), E({3, 2, 1}));
  add_pair(E({2, 1, 1}), E({2, 2, 1}));
  add_pair(E({1, 2, 1}), E({3, 1, 1}));
  CHECK(got == want);
}
