// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_LATTICE_HPP
#define EQSING_LATTICE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "eqsing/errors.hpp"
#include "eqsing/exponent.hpp"
#include "eqsing/localsing.hpp"
#include "eqsing/rational.hpp"

namespace eqsing {

namespace detail {

// All lattice points of the box prod [0, bounds_i], canonical order.
inline std::vector<Exponent> box_points(const std::vector<int>& bounds) {
  int n = static_cast<int>(bounds.size());
  std::vector<Exponent> out;
  std::vector<int32_t> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    int k = 0;
    while (k < n) {
      if (cur[k] < bounds[k]) {
        ++cur[k];
        std::fill(cur.begin(), cur.begin() + k, 0);
        break;
      }
      cur[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

inline long monomial_count(int n, long max_degree) {
  if (max_degree < 0) return 0;
  Z b = z_binomial(max_degree + n, n);
  return static_cast<long>(mpz_get_si(b.get_mpz_t()));
}

inline void degree_points_rec(std::size_t i, int32_t remaining, Exponent& cur,
                              std::vector<Exponent>& out) {
  if (i + 1 == cur.nvars()) {
    cur[i] = remaining;
    out.push_back(cur);
    cur[i] = 0;
    return;
  }
  for (int32_t v = 0; v <= remaining; ++v) {
    cur[i] = v;
    degree_points_rec(i + 1, remaining - v, cur, out);
  }
  cur[i] = 0;
}

// All exponent vectors in n variables of exact total degree deg.
inline std::vector<Exponent> degree_points(std::size_t n, int32_t deg) {
  std::vector<Exponent> out;
  Exponent cur(n);
  degree_points_rec(0, deg, cur, out);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace detail

// h^1 of the equisingular ideal sheaf twisted by k, as the count of Tjurina
// basis monomials of total degree exceeding k.
inline long h1(const SingularitySpec& spec, long k) {
  long count = 0;
  std::vector<int> bounds(spec.alpha.size());
  for (size_t i = 0; i < spec.alpha.size(); ++i) bounds[i] = spec.alpha[i] - 2;
  for (const Exponent& e : detail::box_points(bounds))
    if (e.degree() > k) ++count;
  return count;
}

// h^0 of the same twist: degree-<=k monomials minus the conditions imposed by
// the basis monomials of degree <= k.
inline long h0(const SingularitySpec& spec, long k) {
  if (k < 0) return 0;
  long conditions = milnor_number(spec) - h1(spec, k);
  return detail::monomial_count(spec.nvars(), k) - conditions;
}

inline long expected_dimension(const SingularitySpec& spec) {
  return detail::monomial_count(spec.nvars(), spec.d) - 1 - milnor_number(spec);
}

struct CastelnuovoProfile {
  // values[i] = C(k_first + i).
  std::vector<long> values;
  long k_first = 0;
  std::optional<long> a;  // least k with h^0(J(k)) > 0
  std::optional<long> t;  // least k with h^1(J(k)) = 0

  long value_at(long k) const {
    if (k < k_first || k >= k_first + static_cast<long>(values.size())) return 0;
    return values[k - k_first];
  }
};

// Consecutive differences of a (windowed) h1 sequence: the i-th output is
// h1_seq[i] - h1_seq[i+1] = C(k_first + i + 1) when h1_seq starts at k_first.
inline CastelnuovoProfile castelnuovo_profile(const std::vector<long>& h1_seq,
                                              long k_first = 0) {
  CastelnuovoProfile p;
  p.k_first = k_first + 1;
  for (size_t i = 0; i + 1 < h1_seq.size(); ++i) {
    long c = h1_seq[i] - h1_seq[i + 1];
    if (c < 0)
      throw InvalidProfile("castelnuovo_profile: h1 sequence increases at index " +
                           std::to_string(i + 1));
    p.values.push_back(c);
  }
  if (!h1_seq.empty() && h1_seq.back() == 0) {
    for (size_t i = 0; i < h1_seq.size(); ++i) {
      if (h1_seq[i] == 0) {
        p.t = k_first + static_cast<long>(i);
        break;
      }
    }
  }
  return p;
}

// Full profile of the canonical family: h1 runs from k = -1 (where it equals
// the scheme degree) until it vanishes.
inline CastelnuovoProfile castelnuovo_profile(const SingularitySpec& spec) {
  std::vector<long> seq;
  long k = -1;
  while (true) {
    long v = h1(spec, k);
    seq.push_back(v);
    if (v == 0) break;
    ++k;
  }
  CastelnuovoProfile p = castelnuovo_profile(seq, -1);
  for (long j = 0;; ++j) {
    if (h0(spec, j) > 0) {
      p.a = j;
      break;
    }
  }
  return p;
}

// Both Davis conclusions for the monomial complete intersection of degrees
// (d, k): the profile is bounded by k and its tail steps down by one.
inline bool davis_check(long d, long k) {
  if (k > d || k < 1 || d < 1) throw DomainError("davis_check: need 1 <= k <= d");
  SingularitySpec ci = SingularitySpec::make(
      {static_cast<int>(d) + 1, static_cast<int>(k) + 1}, d + k);
  std::vector<long> seq;
  for (long t = -1; t <= d + k; ++t) seq.push_back(h1(ci, t));
  CastelnuovoProfile p = castelnuovo_profile(seq, -1);
  for (long c : p.values)
    if (c > k) return false;
  for (long j = 1; j <= k + 1; ++j)
    if (p.value_at(d + k - j) != j - 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Index sets of the generic family.

// True when I is a pure power x_i^{alpha_i} or an excluded near-pure monomial
// x_i^{alpha_i - 1} x_j with i != j.
inline bool excluded_from_family(const Exponent& I, const SingularitySpec& spec) {
  int n = spec.nvars();
  for (int i = 0; i < n; ++i) {
    if (I[i] == spec.alpha[i] && I.degree() == spec.alpha[i]) return true;
    if (I[i] == spec.alpha[i] - 1 && I.degree() == spec.alpha[i]) {
      // remaining support is a single x_j, j != i
      for (int j = 0; j < n; ++j)
        if (j != i && I[j] == 1) return true;
    }
  }
  return false;
}

// The index set D: all monomials of total degree in [alpha_n, d] minus the
// pure powers and the near-pure monomials above. alpha_n means min(alpha).
inline std::vector<Exponent> family_slots(const SingularitySpec& spec) {
  int n = spec.nvars();
  int amin = *std::min_element(spec.alpha.begin(), spec.alpha.end());
  std::vector<Exponent> out;
  std::vector<int32_t> cur(n, 0);
  // Odometer over all monomials of degree <= d.
  while (true) {
    Exponent I(cur);
    long deg = I.degree();
    if (deg >= amin && deg <= spec.d && !excluded_from_family(I, spec))
      out.push_back(I);
    int k = 0;
    long total = deg;
    while (k < n) {
      total -= cur[k];
      if (total + cur[k] + 1 <= spec.d) {
        ++cur[k];
        std::fill(cur.begin(), cur.begin() + k, 0);
        break;
      }
      cur[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

// The unique i with I_i = alpha_i - 1 and I_j <= alpha_j - 2 elsewhere, if any.
inline std::optional<int> edge_coordinate(const Exponent& I,
                                          const SingularitySpec& spec) {
  int n = spec.nvars();
  int edge = -1;
  for (int i = 0; i < n; ++i) {
    if (I[i] == spec.alpha[i] - 1) {
      if (edge >= 0) return std::nullopt;  // two maximal coordinates
      edge = i;
    } else if (I[i] > spec.alpha[i] - 2) {
      return std::nullopt;
    }
  }
  if (edge < 0) return std::nullopt;
  if (I.degree() == spec.alpha[edge] - 1) return std::nullopt;  // pure slot
  return edge;
}

// Edge monomials of the family: slots with exactly one coordinate at
// alpha_i - 1, the rest inside the basis box and not all zero.
inline std::vector<Exponent> edge_set(const SingularitySpec& spec) {
  std::vector<Exponent> out;
  for (const Exponent& I : family_slots(spec))
    if (edge_coordinate(I, spec)) out.push_back(I);
  return out;
}

// The pairing on edge monomials: reflect every non-edge coordinate through
// the basis box, keep the edge coordinate. An involution on the edge set with
// |I| + |dual(I)| = d + 1 + alpha_k for edge coordinate k.
inline Exponent dual_edge(const Exponent& I, const SingularitySpec& spec) {
  std::optional<int> k = edge_coordinate(I, spec);
  if (!k) throw DomainError("dual_edge: not an edge monomial: " + I.str());
  std::vector<int32_t> out(spec.nvars());
  for (int j = 0; j < spec.nvars(); ++j)
    out[j] = (j == *k) ? I[j] : spec.alpha[j] - 2 - I[j];
  return Exponent(out);
}

}  // namespace eqsing

#endif  // EQSING_LATTICE_HPP
