// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0
//
// Stabilization by squares: suspend a germ by adding square variables,
// eliminate the square-linear coefficients of the generic family by
// completing the square, and certify reduced components of the suspended
// equisingular stratum through an explicit principal-part witness point.

#ifndef EQSING_STABILIZE_HPP
#define EQSING_STABILIZE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqsing/lattice.hpp"
#include "eqsing/localsing.hpp"
#include "eqsing/stratum.hpp"

namespace eqsing {

// A base germ together with m added square variables and the ambient degree
// of the suspended family. The unisingular variant carries each square
// coordinate along the degree-d deformation as well.
struct SuspensionSpec {
  SingularitySpec base;
  int m = 0;
  long d = 0;
  bool unisingular = false;

  static SuspensionSpec make(SingularitySpec base, int m,
                             std::optional<long> degree = std::nullopt,
                             bool unisingular = false) {
    SuspensionSpec s;
    s.base = std::move(base);
    if (m < 0) throw DomainError("number of added squares must be non-negative");
    s.m = m;
    s.d = degree ? *degree : s.base.d;
    if (s.d < 3) throw DomainError("suspension needs ambient degree >= 3");
    s.unisingular = unisingular;
    return s;
  }

  SingularitySpec suspended() const {
    std::vector<int> a = base.alpha;
    std::vector<Q> l = base.lambda;
    a.insert(a.end(), static_cast<std::size_t>(m), 2);
    l.insert(l.end(), static_cast<std::size_t>(m), unisingular ? Q(1) : Q(0));
    return SingularitySpec::make(std::move(a), d, std::move(l));
  }

  Polynomial suspended_polynomial() const {
    return canonical_polynomial(suspended());
  }
};

// Result of completing the square in the last variable: the transformed
// family, the substitutions used, and the coefficient of every remaining
// x-only monomial as a function of the original parameters. Keys of
// new_from_old keep the full variable width with the square coordinate zero.
struct MixedElimination {
  ParamPolynomial transformed;
  std::vector<CoordChange> changes;
  std::map<Exponent, PPoly, CanonicalLess> new_from_old;
};

// Clears every coefficient linear in the last variable by substitutions
// x_n -> x_n - (c/2) x^I, processed in ascending (degree, lex) order so that
// terms created by higher layers are reached later. Requires the square
// coefficient to be exactly 1 and the germ to vanish to order >= 2. Created
// terms above xmax are dropped; a cascade that neither an x-degree bound nor
// the parameter cap cuts off is reported as non-terminating.
inline MixedElimination eliminate_mixed_terms(const ParamPolynomial& F,
                                              int64_t xmax = -1) {
  auto n = F.nvars();
  if (n < 2) throw DomainError("mixed-term elimination needs a square variable");
  std::size_t sq = n - 1;
  PPoly sc = F.coeff(Exponent::unit(n, sq, 2));
  if (!(sc.term_count() == 1 && sc.constant_part() == 1))
    throw DomainError("mixed-term elimination needs square coefficient exactly 1");
  for (const auto& [e, c] : F.coeffs())
    if (e.degree() < 2 && !c.is_zero())
      throw DomainError("mixed-term elimination needs a germ of order >= 2");

  MixedElimination out;
  out.transformed = F;
  auto next_target = [&]() -> std::optional<Exponent> {
    std::optional<Exponent> best;
    for (const auto& [e, c] : out.transformed.coeffs()) {
      if (e[sq] != 1 || c.is_zero()) continue;
      if (xmax >= 0 && e.degree() > xmax) continue;
      if (!best || e.degree() < best->degree() ||
          (e.degree() == best->degree() && e.lex_less(*best)))
        best = e;
    }
    return best;
  };
  std::size_t guard = 0;
  while (auto target = next_target()) {
    if (++guard > 10000)
      throw DomainError(
          "mixed-term elimination did not terminate; supply an x-degree bound");
    Exponent head = *target;
    head[sq] = 0;
    if (head.is_zero())
      throw std::logic_error("square-linear constant term cannot be eliminated");
    CoordChange ch{CoordChange::Kind::Substitution, sq, head,
                   out.transformed.coeff(*target) * Q(-1, 2)};
    out.transformed = apply_coord_change(out.transformed, ch, xmax);
    if (!out.transformed.coeff(*target).is_zero())
      throw std::logic_error("square-linear term survived its elimination");
    out.changes.push_back(std::move(ch));
  }
  for (const auto& [e, c] : out.transformed.coeffs())
    if (e[sq] == 0 && !c.is_zero()) out.new_from_old.emplace(e, c);
  return out;
}

// Block index of a slot: 0 for x-only slots, j for slots linear in the j-th
// square variable, -1 for slots mixing squares or quadratic in one. The
// square variables are the last m coordinates.
inline int square_block_of(const Exponent& slot, int base_vars, int m) {
  int block = 0;
  for (int j = 0; j < m; ++j) {
    int32_t e = slot[static_cast<std::size_t>(base_vars + j)];
    if (e == 0) continue;
    if (e > 1 || block != 0) return -1;
    block = j + 1;
  }
  return block;
}

// Per-block ranks of a quadratic part whose terms never mix square blocks.
// Uses the same symmetrization as the full pairing rank, so the block ranks
// add up to it.
inline std::vector<long> quadratic_block_ranks(
    const std::map<std::pair<uint32_t, uint32_t>, Q>& quad,
    const ParamTable& table, int base_vars, int m) {
  std::vector<std::map<uint32_t, std::size_t>> pos(static_cast<std::size_t>(m) + 1);
  using Entry = std::pair<std::pair<std::size_t, std::size_t>, Q>;
  std::vector<std::vector<Entry>> entries(static_cast<std::size_t>(m) + 1);
  for (const auto& [ij, c] : quad) {
    if (c == 0) continue;
    int ba = square_block_of(table.slot(ij.first), base_vars, m);
    int bb = square_block_of(table.slot(ij.second), base_vars, m);
    if (ba < 0 || bb < 0 || ba != bb)
      throw DomainError("quadratic part mixes square blocks");
    auto& ix = pos[static_cast<std::size_t>(ba)];
    auto local = [&ix](uint32_t id) {
      return ix.emplace(id, ix.size()).first->second;
    };
    entries[static_cast<std::size_t>(ba)].push_back(
        {{local(ij.first), local(ij.second)}, c});
  }
  std::vector<long> ranks(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t b = 0; b < ranks.size(); ++b) {
    std::size_t k = pos[b].size();
    if (k == 0) continue;
    std::vector<std::vector<Q>> mat(k, std::vector<Q>(k, Q(0)));
    for (const auto& [ij, c] : entries[b]) {
      if (ij.first == ij.second) {
        mat[ij.first][ij.first] += c;
      } else {
        mat[ij.first][ij.second] += c / 2;
        mat[ij.second][ij.first] += c / 2;
      }
    }
    ranks[b] = quadratic_rank(mat);
  }
  return ranks;
}

// Derived stratum system of the suspended germ, with the invariant ledger
// checked against the base: the linear rank must equal tau - h1 and the
// pairing quadric must split along the square blocks.
struct SuspendedSystem {
  SuspensionSpec spec;
  SingularitySpec suspended;
  EquationSystem sys;
  long tau = 0;
  long h1 = 0;  // obstruction dimension of the base at the ambient degree
  long rank_linear_total = 0;
  std::vector<long> block_ranks;  // x-only block, then one per added square
};

inline SuspendedSystem derive_suspended_system(const SuspensionSpec& spec,
                                               int cap = default_param_cap()) {
  SuspendedSystem out;
  out.spec = spec;
  out.suspended = spec.suspended();
  out.tau = milnor_number(spec.base);
  // The whole construction assumes the base is unobstructed one level up.
  if (h1(spec.base, out.tau + 1) != 0)
    throw DomainError("base singularity is obstructed at level tau + 1");
  out.h1 = h1(spec.base, spec.d);
  out.sys = derive_stratum(out.suspended, cap);

  std::vector<std::vector<Q>> rows;
  for (const auto& eq : out.sys.equations) {
    if (eq.is_last) continue;
    std::vector<Q> r(out.sys.table->size(), Q(0));
    for (const auto& [id, c] : eq.linear) r[id] = c;
    rows.push_back(std::move(r));
  }
  long emitted = rows.empty() ? 0 : static_cast<long>(rank_exact(rows));
  out.rank_linear_total = static_cast<long>(out.sys.virtual_rows.size()) + emitted;
  if (out.rank_linear_total != out.tau - out.h1)
    throw DomainError("suspended system rank does not match tau - h1");

  out.block_ranks.assign(static_cast<std::size_t>(spec.m) + 1, 0);
  if (out.sys.last.present) {
    const StratumEquation* last = nullptr;
    for (const auto& eq : out.sys.equations)
      if (eq.is_last) last = &eq;
    if (last != nullptr)
      out.block_ranks = quadratic_block_ranks(last->quadratic, *out.sys.table,
                                              spec.base.nvars(), spec.m);
  }
  return out;
}

// Sum of the per-block pairing ranks; defined for a single obstruction.
inline long combined_quadratic_rank(const SuspendedSystem& ss) {
  if (ss.h1 != 1)
    throw DomainError("combined quadratic rank needs a single obstruction");
  long sum = 0;
  for (long r : ss.block_ranks) sum += r;
  if (ss.sys.last.present && sum != ss.sys.last.quadratic_rank)
    throw std::logic_error("square blocks do not account for the full quadratic rank");
  return sum;
}

// Certificate that the suspended stratum germ contains a reduced component:
// a rational point on the principal-part variety, supported on free slots,
// where the distinguished maximal minor of the principal Jacobian is nonzero.
struct WitnessCertificate {
  bool found = false;
  Exponent special;  // box corner of the suspended x-part
  Exponent J, K;     // split special = J + K picked for the minor
  Exponent slot_J, slot_K;
  std::map<uint32_t, Q> point;
  Q minor_value;
  long jacobian_rank = 0;
  std::string note;
};

namespace detail {

inline Q value_at(const std::map<uint32_t, Q>& pt, uint32_t id) {
  auto it = pt.find(id);
  return it == pt.end() ? Q(0) : it->second;
}

inline Q quad_value(const std::map<std::pair<uint32_t, uint32_t>, Q>& quad,
                    const std::map<uint32_t, Q>& pt) {
  Q v(0);
  for (const auto& [ij, c] : quad)
    v += c * value_at(pt, ij.first) * value_at(pt, ij.second);
  return v;
}

// Subexponents of bound over the first k coordinates with the given total
// degree, in ascending lexicographic order.
inline std::vector<Exponent> bounded_splits(const Exponent& bound, std::size_t k,
                                            long deg) {
  std::vector<Exponent> out;
  std::vector<int> cur(bound.nvars(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == k) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    long hi = std::min<long>(bound[i], left);
    for (long v = 0; v <= hi; ++v) {
      cur[i] = static_cast<int>(v);
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, deg);
  return out;
}

}  // namespace detail

// Searches small rational heights for a witness point. The point charges the
// dual partner of one distinguished edge slot (plus a hyperbolic correction
// in the last square block when needed), so the quadric vanishes there while
// its derivative by the distinguished slot does not.
inline WitnessCertificate witness_reduced_component(const SuspendedSystem& ss,
                                                    int height_budget = 8) {
  if (ss.h1 != 1)
    throw DomainError("witness construction needs exactly one obstruction");
  if (ss.spec.m < 2)
    throw DomainError("witness construction needs at least h1 + 1 added squares");
  if (h1(ss.spec.base, 2 * ss.spec.d - 2) != 0)
    throw DomainError("witness construction needs no obstruction at level 2d - 2");
  const EquationSystem& sys = ss.sys;
  if (!sys.last.present || !sys.last.linear_part_zero)
    throw DomainError("witness construction needs a quadratic-led last equation");
  const StratumEquation* last = nullptr;
  for (const auto& eq : sys.equations)
    if (eq.is_last) last = &eq;
  if (last == nullptr) throw std::logic_error("missing last equation");

  const ParamTable& table = *sys.table;
  int m = ss.spec.m;
  auto nm = static_cast<std::size_t>(sys.spec.nvars());
  auto nbase = nm - static_cast<std::size_t>(m);

  WitnessCertificate w;
  Exponent corner(nm);
  for (std::size_t i = 0; i < nbase; ++i)
    corner[i] = sys.spec.alpha[i] - 2;
  w.special = corner;
  long degL = corner.degree();

  // Split special = J + K with |J| minimal and both slots inside the family
  // degree range; ties go to the lexicographically first J.
  bool split_found = false;
  long dj0 = std::max<long>(2, degL - (ss.spec.d - 1));
  for (long dj = dj0; 2 * dj <= degL && !split_found; ++dj) {
    for (const Exponent& J : detail::bounded_splits(corner, nbase, dj)) {
      Exponent K = corner - J;
      Exponent sj = J, sk = K;
      sj[nbase] = 1;
      sk[nbase] = 1;
      if (!table.contains(sj) || !table.contains(sk)) continue;
      w.J = J;
      w.K = K;
      w.slot_J = sj;
      w.slot_K = sk;
      split_found = true;
      break;
    }
  }
  if (!split_found)
    throw DomainError("no admissible split of the corner exponent");

  const auto& quad = last->quadratic;
  uint32_t idJ = table.id_of(w.slot_J);
  uint32_t idK = table.id_of(w.slot_K);

  for (int h = 1; h <= height_budget && !w.found; ++h) {
    std::map<uint32_t, Q> pt;
    pt[idK] = Q(h);
    Q v0 = detail::quad_value(quad, pt);
    if (v0 != 0) {
      // Cancel with a hyperbolic pair from the last square block; it shares
      // no quadratic term with the slots charged so far.
      bool fixed = false;
      for (const auto& [ij, c] : quad) {
        if (ij.first == ij.second) continue;
        if (square_block_of(table.slot(ij.first), static_cast<int>(nbase), m) != m)
          continue;
        if (pt.count(ij.first) || pt.count(ij.second)) continue;
        pt[ij.first] = Q(1);
        pt[ij.second] = -v0 / c;
        fixed = true;
        break;
      }
      if (!fixed) continue;
      v0 = detail::quad_value(quad, pt);
    }
    if (v0 != 0) continue;
    // The linear parts of the solved rows must vanish at the point.
    bool on_variety = true;
    for (const auto& eq : sys.equations) {
      if (eq.is_last) continue;
      Q v(0);
      for (const auto& [id, c] : eq.linear) v += c * detail::value_at(pt, id);
      if (v != 0) {
        on_variety = false;
        break;
      }
    }
    if (!on_variety) continue;
    // Distinguished minor: the quadric derivative by the slot_J parameter.
    // The emitted rows contribute an identity block over their pivots, so
    // this single entry decides the full minor.
    Q minor(0);
    for (const auto& [ij, c] : quad) {
      if (ij.first == idJ && ij.second == idJ)
        minor += 2 * c * detail::value_at(pt, idJ);
      else if (ij.first == idJ)
        minor += c * detail::value_at(pt, ij.second);
      else if (ij.second == idJ)
        minor += c * detail::value_at(pt, ij.first);
    }
    if (minor == 0) continue;

    std::vector<std::vector<Q>> rows;
    for (const auto& eq : sys.equations) {
      if (eq.is_last) continue;
      std::vector<Q> r(table.size(), Q(0));
      for (const auto& [id, c] : eq.linear) r[id] = c;
      rows.push_back(std::move(r));
    }
    std::vector<Q> grad(table.size(), Q(0));
    for (const auto& [ij, c] : quad) {
      if (ij.first == ij.second) {
        grad[ij.first] += 2 * c * detail::value_at(pt, ij.first);
      } else {
        grad[ij.first] += c * detail::value_at(pt, ij.second);
        grad[ij.second] += c * detail::value_at(pt, ij.first);
      }
    }
    rows.push_back(std::move(grad));
    w.found = true;
    w.point = std::move(pt);
    w.minor_value = minor;
    w.jacobian_rank = static_cast<long>(sys.virtual_rows.size()) +
                      static_cast<long>(rank_exact(rows));
    w.note =
        "principal-part point with an invertible distinguished minor; the "
        "stratum germ has a reduced component through it";
  }
  if (!w.found)
    w.note = "no witness point within the height budget; certificate inconclusive";
  return w;
}

// Oracle that suspension preserves the local invariants: the Tjurina number
// of the germ itself and the obstruction dimension recovered from the rank
// of the derived system. Returns (h1, tau) of the suspension.
inline std::pair<long, long> check_h1_tau_preserved(const SuspensionSpec& spec,
                                                    int cap = default_param_cap()) {
  long base_tau = milnor_number(spec.base);
  if (tjurina_number(canonical_polynomial(spec.base)) != base_tau)
    throw DomainError("base tjurina number disagrees with the model value");
  if (tjurina_number(spec.suspended_polynomial()) != base_tau)
    throw DomainError("suspension changed the tjurina number");
  long base_h1 = h1(spec.base, spec.d);
  SuspendedSystem ss = derive_suspended_system(spec, cap);
  long susp_h1 = ss.tau - ss.rank_linear_total;
  if (susp_h1 != base_h1)
    throw DomainError("suspension changed the obstruction dimension");
  return {susp_h1, base_tau};
}

// Plane-curve criterion: the equisingular ideal of x^a1 + y^a2 imposes
// independent conditions in degree 2d - 4. The node is unobstructed at every
// degree; all other profiles reduce to a lattice count.
inline bool check_curve_2dminus4(int a1, int a2,
                                 std::optional<long> degree = std::nullopt) {
  if (a1 == 2 && a2 == 2) return true;
  SingularitySpec s = SingularitySpec::make({a1, a2}, degree);
  return h1(s, 2 * s.d - 4) == 0;
}

}  // namespace eqsing

#endif  // EQSING_STABILIZE_HPP
