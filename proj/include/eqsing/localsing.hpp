// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_LOCALSING_HPP
#define EQSING_LOCALSING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "eqsing/echelon.hpp"
#include "eqsing/errors.hpp"
#include "eqsing/exponent.hpp"
#include "eqsing/ordering.hpp"
#include "eqsing/polynomial.hpp"
#include "eqsing/rational.hpp"

namespace eqsing {

// Data of the model quasihomogeneous germ f = sum x_i^{alpha_i} + sum lambda_i x_i^d
// together with the ambient curve/hypersurface degree d.
struct SingularitySpec {
  std::vector<int> alpha;
  std::vector<Q> lambda;
  long d = 0;

  int nvars() const { return static_cast<int>(alpha.size()); }

  // Default degree used by the generic-family construction.
  static long default_degree(const std::vector<int>& alpha) {
    long s = std::accumulate(alpha.begin(), alpha.end(), 0L);
    return s - (2 * static_cast<long>(alpha.size()) + 1);
  }

  static SingularitySpec make(std::vector<int> alpha,
                              std::optional<long> degree = std::nullopt,
                              std::vector<Q> lambda = {}) {
    SingularitySpec s;
    s.alpha = std::move(alpha);
    if (s.alpha.empty()) throw DomainError("singularity spec needs at least one exponent");
    for (int a : s.alpha)
      if (a < 2) throw DomainError("exponents must satisfy alpha_i >= 2");
    s.lambda = std::move(lambda);
    if (s.lambda.empty()) s.lambda.assign(s.alpha.size(), Q(0));
    if (s.lambda.size() != s.alpha.size())
      throw DomainError("lambda must have one entry per variable");
    s.d = degree ? *degree : default_degree(s.alpha);
    if (s.d < 1) throw DomainError("degree must be positive");
    for (std::size_t i = 0; i < s.alpha.size(); ++i) {
      if (s.lambda[i] != 0 && static_cast<long>(s.alpha[i]) > s.d)
        throw DomainError(
            "lambda term needs alpha_i <= d to stay on or above the polytope");
    }
    return s;
  }

  // True when every alpha_i fits under the degree, which the generic-family
  // construction assumes. Systems can still be derived formally without this.
  bool degree_dominates() const {
    return std::all_of(alpha.begin(), alpha.end(),
                       [&](int a) { return d >= a; });
  }

  // Weights (1/alpha_1, ..., 1/alpha_n).
  std::vector<Q> weights() const {
    std::vector<Q> w;
    w.reserve(alpha.size());
    for (int a : alpha) w.emplace_back(Q(1) / Q(a));
    return w;
  }

  Q weighted_degree(const Exponent& I) const {
    Q s(0);
    for (int i = 0; i < nvars(); ++i) s += Q(I[i]) / Q(alpha[i]);
    return s;
  }

  // Spec with alpha sorted descending plus the variable permutation used:
  // perm[new_index] = old_index.
  std::pair<SingularitySpec, std::vector<int>> sorted_descending() const {
    std::vector<int> perm(alpha.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return alpha[a] > alpha[b]; });
    SingularitySpec s;
    s.d = d;
    for (int p : perm) {
      s.alpha.push_back(alpha[p]);
      s.lambda.push_back(lambda[p]);
    }
    return {s, perm};
  }
};

// f = sum_i c_i x_i^{alpha_i} + sum_{alpha_i < d} lambda_i x_i^d where c_i is
// 1 + lambda_i when alpha_i = d and 1 otherwise.
inline Polynomial canonical_polynomial(const SingularitySpec& spec) {
  int n = spec.nvars();
  Polynomial f(n);
  for (int i = 0; i < n; ++i) {
    if (spec.alpha[i] == spec.d) {
      f.add_term(Exponent::unit(n, i, static_cast<int>(spec.d)), Q(1) + spec.lambda[i]);
    } else {
      f.add_term(Exponent::unit(n, i, spec.alpha[i]), Q(1));
      if (spec.lambda[i] != 0)
        f.add_term(Exponent::unit(n, i, static_cast<int>(spec.d)), spec.lambda[i]);
    }
  }
  return f;
}

inline long milnor_number(const SingularitySpec& spec) {
  long m = 1;
  for (int a : spec.alpha) m *= (a - 1);
  return m;
}

// Monomial basis of the Milnor (= Tjurina) algebra of the model germ: the box
// {I : I_j <= alpha_j - 2}.
inline std::vector<Exponent> milnor_basis(const SingularitySpec& spec) {
  int n = spec.nvars();
  std::vector<Exponent> out;
  std::vector<int32_t> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    int k = 0;
    while (k < n) {
      if (cur[k] < spec.alpha[k] - 2) {
        ++cur[k];
        std::fill(cur.begin(), cur.begin() + k, 0);
        break;
      }
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

namespace detail {

// dim of C{x} / (f, df/dx_1, ..., df/dx_n) restricted to the degree-<=B jet:
// number of degree-<=B monomials minus the rank of all monomial multiples of
// the generators truncated at degree B.
inline long tjurina_jet_dimension(const std::vector<Polynomial>& gens, int nvars, int B) {
  SparseEchelon ech;
  std::vector<int32_t> cur(nvars, 0);
  for (const Polynomial& g : gens) {
    long o = g.order();
    if (o < 0) continue;
    std::fill(cur.begin(), cur.end(), 0);
    // Odometer over multiplier monomials x^cur with |cur| + ord(g) <= B.
    while (true) {
      long deg = std::accumulate(cur.begin(), cur.end(), 0L);
      if (deg + o <= B) {
        Polynomial row = g.shifted(Exponent(cur)).jet(B);
        if (!row.is_zero()) {
          SparseEchelon::Row r;
          for (const auto& [e, c] : row.terms()) r.emplace(e, c);
          ech.insert(std::move(r));
        }
      }
      int k = 0;
      while (k < nvars) {
        long rest = deg - cur[k];
        if (cur[k] < B - o && rest + cur[k] + 1 + o <= B) {
          ++cur[k];
          std::fill(cur.begin(), cur.begin() + k, 0);
          break;
        }
        deg -= cur[k];
        cur[k] = 0;
        ++k;
      }
      if (k == nvars) break;
    }
  }
  long total = static_cast<long>(mpz_get_ui(z_binomial(B + nvars, nvars).get_mpz_t()));
  return total - ech.rank();
}

}  // namespace detail

// Tjurina number by exact linear algebra on jet spaces of increasing order,
// stopping once the quotient dimension agrees over two consecutive orders.
inline long tjurina_number(const Polynomial& f, int start_order = -1, int cap = 64) {
  int n = f.nvars();
  if (f.is_zero()) throw DomainError("tjurina_number: zero polynomial");
  if (f.order() < 2)
    throw DomainError("tjurina_number: germ must vanish to order >= 2 at the origin");
  std::vector<Polynomial> gens;
  gens.push_back(f);
  for (int i = 0; i < n; ++i) {
    Polynomial p = f.partial_derivative(i);
    if (!p.is_zero()) gens.push_back(p);
  }
  int B = start_order;
  if (B < 0) {
    long deg = f.degree();
    B = static_cast<int>(std::min<long>(deg > 2 ? deg : 2, cap));
  }
  long prev = detail::tjurina_jet_dimension(gens, n, B);
  while (B < cap) {
    long next = detail::tjurina_jet_dimension(gens, n, B + 1);
    if (next == prev) return prev;
    prev = next;
    ++B;
  }
  throw DomainError(
      "tjurina_number: jet dimension did not stabilize; singularity may be non-isolated");
}

// An isolated singularity with Tjurina number tau is contact (tau+1)-determined.
inline long determinacy_bound(long tau) {
  if (tau < 1) throw DomainError("determinacy_bound: tau must be >= 1");
  return tau + 1;
}

enum class PolytopePosition { Below, On, Above };

inline PolytopePosition weighted_position(const Exponent& I, const SingularitySpec& spec) {
  Q w = spec.weighted_degree(I);
  int c = cmp(w, Q(1));
  if (c < 0) return PolytopePosition::Below;
  if (c > 0) return PolytopePosition::Above;
  return PolytopePosition::On;
}

inline std::string to_string(PolytopePosition p) {
  switch (p) {
    case PolytopePosition::Below: return "Below";
    case PolytopePosition::On: return "On";
    default: return "Above";
  }
}

struct NewtonPolytope {
  std::vector<Exponent> vertices;
  // Set when the vertices lie on a unique hyperplane <w, I> = 1 with w > 0;
  // then the principal part of f is quasihomogeneous of type (w; 1).
  std::optional<std::vector<Q>> quasihomogeneous_weights;
};

namespace detail {

// Exact feasibility test for the local Newton polyhedron: is p in
// conv(pts) + R_{>=0}^n? Phase-1 simplex on sum lambda_s pts_s + slack = p,
// sum lambda_s = 1, lambda >= 0, slack >= 0 with artificials.
inline bool in_dominated_hull(const Exponent& p, const std::vector<Exponent>& pts) {
  if (pts.empty()) return false;
  int n = p.nvars();
  int m = n + 1;                              // constraint rows
  int k = static_cast<int>(pts.size());       // lambda columns
  int w = k + n + m;                          // lambdas + slacks + artificials
  // Tableau columns: k lambdas, n slacks, m artificials, rhs.
  std::vector<std::vector<Q>> T(m, std::vector<Q>(w + 1, Q(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) T[i][j] = Q(pts[j][i]);
    T[i][k + i] = Q(1);
    T[i][k + n + i] = Q(1);
    T[i][w] = Q(p[i]);
  }
  for (int j = 0; j < k; ++j) T[n][j] = Q(1);
  T[n][k + n + n] = Q(1);
  T[n][w] = Q(1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = k + n + i;
  // Objective: minimize sum of artificials; reduced costs start as the
  // negated column sums over constraint rows.
  std::vector<Q> cost(w, Q(0));
  Q obj(0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < w; ++j) cost[j] -= T[i][j];
    obj -= T[i][w];
  }
  for (int i = 0; i < m; ++i) cost[k + n + i] += Q(1);
  while (true) {
    int enter = -1;
    for (int j = 0; j < w; ++j)
      if (cost[j] < 0) { enter = j; break; }  // Bland's rule
    if (enter < 0) break;
    int leave = -1;
    Q best(0);
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Q ratio = T[i][w] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded cannot happen for phase 1
    Q piv = T[leave][enter];
    for (Q& v : T[leave]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Q f = T[i][enter];
      for (int j = 0; j <= w; ++j) T[i][j] -= f * T[leave][j];
    }
    Q f = cost[enter];
    for (int j = 0; j < w; ++j) cost[j] -= f * T[leave][j];
    obj -= f * T[leave][w];
    basis[leave] = enter;
  }
  return obj == 0;
}

// Unique solution of pts_s . w = 1 for all s, if one exists; nullopt when the
// system is inconsistent or underdetermined.
inline std::optional<std::vector<Q>> hyperplane_weights(const std::vector<Exponent>& pts,
                                                        int n) {
  std::vector<std::vector<Q>> A;
  for (const Exponent& e : pts) {
    std::vector<Q> row(n + 1, Q(0));
    for (int i = 0; i < n; ++i) row[i] = Q(e[i]);
    row[n] = Q(1);
    A.push_back(std::move(row));
  }
  // Gauss-Jordan on [A | 1].
  int rows = static_cast<int>(A.size());
  std::vector<int> pivot_col(rows, -1);
  int r = 0;
  for (int c = 0; c < n && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(A[r], A[sel]);
    Q piv = A[r][c];
    for (Q& v : A[r]) v /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Q f = A[i][c];
      for (int j = 0; j <= n; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (A[i][n] != 0) return std::nullopt;  // inconsistent
  if (r < n) return std::nullopt;           // underdetermined
  std::vector<Q> w(n, Q(0));
  for (int i = 0; i < r; ++i) w[pivot_col[i]] = A[i][n];
  for (const Q& v : w)
    if (v <= 0) return std::nullopt;
  return w;
}

}  // namespace detail

inline NewtonPolytope newton_polytope(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("newton_polytope: zero polynomial");
  if (f.coeff(Exponent(std::vector<int32_t>(f.nvars(), 0))) != 0)
    throw DomainError("newton_polytope: germ must vanish at the origin");
  std::vector<Exponent> support;
  for (const auto& [e, c] : f.terms()) support.push_back(e);
  NewtonPolytope np;
  for (size_t i = 0; i < support.size(); ++i) {
    std::vector<Exponent> others;
    for (size_t j = 0; j < support.size(); ++j)
      if (j != i) others.push_back(support[j]);
    if (!detail::in_dominated_hull(support[i], others)) np.vertices.push_back(support[i]);
  }
  std::sort(np.vertices.begin(), np.vertices.end(), CanonicalLess{});
  np.quasihomogeneous_weights = detail::hyperplane_weights(np.vertices, f.nvars());
  return np;
}

}  // namespace eqsing

#endif  // EQSING_LOCALSING_HPP
