// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_ECHELON_HPP
#define EQSING_ECHELON_HPP

#include <map>
#include <vector>

#include "eqsing/exponent.hpp"
#include "eqsing/rational.hpp"

namespace eqsing {

// Incremental exact row echelon for rows indexed by monomials. Rows are kept
// normalized with pivot coefficient 1; the pivot of a row is its canonical
// maximum. Used for jet-space quotient dimensions.
class SparseEchelon {
 public:
  using Row = std::map<Exponent, Q, CanonicalLess>;

  // Reduces the row against the stored basis and inserts the remainder.
  // Returns true when the rank grew.
  bool insert(Row row) {
    while (!row.empty()) {
      const Exponent& pivot = row.rbegin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        Q lc = row.rbegin()->second;
        for (auto& [e, c] : row) c /= lc;
        rows_.emplace(pivot, std::move(row));
        return true;
      }
      Q factor = row.rbegin()->second;
      for (const auto& [e, c] : it->second) {
        auto jt = row.find(e);
        if (jt == row.end()) {
          row.emplace(e, -factor * c);
        } else {
          jt->second -= factor * c;
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

  std::size_t pivots_with_degree_at_most(int64_t k) const {
    std::size_t c = 0;
    for (const auto& [p, r] : rows_)
      if (p.degree() <= k) ++c;
    return c;
  }

  const std::map<Exponent, Row, CanonicalLess>& rows() const { return rows_; }

 private:
  std::map<Exponent, Row, CanonicalLess> rows_;
};

// Exact rank of a dense rational matrix by Gaussian elimination.
inline std::size_t rank_dense(std::vector<std::vector<Q>> m) {
  if (m.empty()) return 0;
  std::size_t nrows = m.size(), ncols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      if (m[i][col] == 0) continue;
      Q f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Fraction-free rank via the Bareiss one-step elimination: every intermediate
// division is exact over Z, so no rational blow-up occurs.
inline std::size_t rank_bareiss(std::vector<std::vector<Z>> m) {
  if (m.empty()) return 0;
  std::size_t nrows = m.size(), ncols = m[0].size();
  Z prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && m[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        Z t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Clears denominators row by row and delegates to the fraction-free routine.
inline std::size_t rank_exact(const std::vector<std::vector<Q>>& m) {
  std::vector<std::vector<Z>> zm;
  zm.reserve(m.size());
  for (const auto& row : m) {
    Z lcm = 1;
    for (const Q& q : row)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Z> zrow;
    zrow.reserve(row.size());
    for (const Q& q : row) {
      Q v = q * Q(lcm);
      v.canonicalize();
      zrow.push_back(v.get_num());
    }
    zm.push_back(std::move(zrow));
  }
  return rank_bareiss(std::move(zm));
}

}  // namespace eqsing

#endif  // EQSING_ECHELON_HPP
