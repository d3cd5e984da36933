// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_REDUCTION_HPP
#define EQSING_REDUCTION_HPP

#include <map>
#include <optional>
#include <vector>

#include "eqsing/errors.hpp"
#include "eqsing/param.hpp"
#include "eqsing/polynomial.hpp"

namespace eqsing {

// One division step of a normal-form run: the leading monomial that was
// processed and the divisor used (-1 when the term was moved to the result).
struct NFTraceStep {
  Exponent lead;
  int divisor = -1;
};

// Buchberger normal form for global orderings. Repeatedly cancels the leading
// term against the first divisor whose leading monomial divides it; leading
// terms that no divisor handles move to the result. The result is normalized
// to leading coefficient 1.
inline Polynomial red_nf_buchberger(const Polynomial& f,
                                    const std::vector<Polynomial>& gens,
                                    const Ordering& ord,
                                    std::vector<NFTraceStep>* trace = nullptr) {
  if (!ord.is_global())
    throw DomainError("Buchberger normal form requires a global ordering");
  std::vector<Exponent> lms;
  std::vector<Q> lcs;
  lms.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("zero divisor in normal form");
    lms.push_back(g.leading_exponent(ord));
    lcs.push_back(g.terms().at(lms.back()));
  }
  Polynomial h = f;
  Polynomial p(f.nvars());
  while (!h.is_zero()) {
    Exponent lm = h.leading_exponent(ord);
    Q lc = h.terms().at(lm);
    int divisor = -1;
    for (std::size_t i = 0; i < lms.size(); ++i) {
      if (lms[i].divides(lm)) {
        divisor = static_cast<int>(i);
        break;
      }
    }
    if (trace) trace->push_back({lm, divisor});
    if (divisor < 0) {
      p.add_term(lm, lc);
      h.add_term(lm, -lc);
    } else {
      auto i = static_cast<std::size_t>(divisor);
      h -= gens[i].shifted(lm - lms[i]) * (lc / lcs[i]);
    }
  }
  if (!p.is_zero()) p *= Q(1) / p.leading_coeff(ord);
  return p;
}

// Highest corner of the monomial ideal spanned by the given leading
// monomials: the ordering-minimal monomial outside the ideal. Requires a
// cofinite monomial ideal, i.e. a pure power of every variable among the
// generators.
inline Exponent highest_corner(const std::vector<Exponent>& lead_monomials,
                               const Ordering& ord) {
  if (lead_monomials.empty()) throw DomainError("empty monomial ideal");
  std::size_t n = lead_monomials.front().nvars();
  std::vector<int32_t> box(n, -1);
  for (const auto& m : lead_monomials) {
    if (m.support_size() <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] > 0 && (box[i] < 0 || m[i] < box[i])) box[i] = m[i];
      }
      if (m.is_zero()) throw DomainError("unit leading ideal has no corner");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (box[i] < 0)
      throw DomainError(
          "leading ideal is not cofinite: no pure power of x" +
          std::to_string(i + 1));
  std::optional<Exponent> best;
  Exponent cur(n);
  // Walks the finite box of candidates lying under every pure power.
  for (;;) {
    bool inside = false;
    for (const auto& m : lead_monomials) {
      if (m.divides(cur)) {
        inside = true;
        break;
      }
    }
    if (!inside && (!best || ord.less(cur, *best))) best = cur;
    std::size_t i = 0;
    while (i < n) {
      if (cur[i] + 1 < box[i]) {
        cur[i] += 1;
        break;
      }
      cur[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  if (!best) throw DomainError("leading ideal is the whole ring");
  return *best;
}

// Result of a truncated local normal-form run: the surviving coefficients by
// monomial, and optionally the step trace.
struct LocalNFResult {
  std::map<Exponent, PPoly, CanonicalLess> remainder;
  std::vector<NFTraceStep> steps;
};

namespace detail {

inline Exponent param_leading_exponent(const ParamPolynomial& p,
                                       const Ordering& ord) {
  if (p.is_zero()) throw std::logic_error("leading term of zero");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.coeffs()) {
    if (best == nullptr || ord.compare(e, *best) > 0) best = &e;
  }
  return *best;
}

}  // namespace detail

// Normal form against divisors with constant leading coefficients under a
// local weighted ordering, truncated at the highest corner: once the leading
// monomial drops below hc the tail lies in the ideal and is discarded. Every
// division step strictly lowers the leading monomial and only finitely many
// monomials sit at or above hc, so the loop terminates without degree caps.
// Terms weighted strictly above the corner can never become the leading
// monomial before the cut, so they are pruned eagerly.
inline LocalNFResult truncated_local_nf(const ParamPolynomial& f,
                                        const std::vector<ParamPolynomial>& gens,
                                        const Ordering& ord, const Exponent& hc,
                                        bool want_trace = false) {
  if (ord.kind() != OrderKind::NegWeightLex)
    throw DomainError("truncated normal form requires a Ws ordering");
  LocalNFResult out;
  std::vector<Exponent> lms;
  std::vector<Q> lcs;
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("zero divisor in normal form");
    Exponent lm = detail::param_leading_exponent(g, ord);
    const PPoly& lead = g.coeffs().at(lm);
    if (lead.term_count() != 1 || !lead.terms().begin()->first.is_one())
      throw NonConstantPivot("divisor leading coefficient is not constant");
    lms.push_back(lm);
    lcs.push_back(lead.constant_part());
  }
  const Q hc_weight = ord.weighted_degree(hc);
  ParamPolynomial h = f;
  h.prune_weight_above(ord.weights(), hc_weight);
  std::size_t steps = 0;
  while (!h.is_zero()) {
    if (++steps > 10000000) throw std::logic_error("normal form diverged");
    Exponent lm = detail::param_leading_exponent(h, ord);
    if (ord.compare(lm, hc) < 0) break;
    PPoly lc = h.coeff(lm);
    int divisor = -1;
    for (std::size_t i = 0; i < lms.size(); ++i) {
      if (lms[i].divides(lm)) {
        divisor = static_cast<int>(i);
        break;
      }
    }
    if (want_trace) out.steps.push_back({lm, divisor});
    if (divisor < 0) {
      out.remainder[lm] = lc;
      h.erase(lm);
    } else {
      auto i = static_cast<std::size_t>(divisor);
      h.erase(lm);
      ParamPolynomial tail = gens[i];
      tail.erase(lms[i]);
      h.axpy(lc * (Q(-1) / lcs[i]), lm - lms[i], tail);
      h.prune_weight_above(ord.weights(), hc_weight);
    }
  }
  return out;
}

// Ideal membership for the Jacobian ideal of a semi-quasihomogeneous germ.
// The divisors' leading monomials must generate the full leading ideal (true
// when every non-pure term of f sits strictly above the weight-one simplex);
// then the target is a member exactly when its truncated normal form is zero.
struct MembershipResult {
  bool member = false;
  std::map<Exponent, PPoly, CanonicalLess> remainder;
};

inline MembershipResult membership_in_jacobian(
    const Polynomial& target, const std::vector<Polynomial>& gens,
    const Ordering& ord, const Exponent& hc) {
  auto table = std::make_shared<ParamTable>();
  ParamPolynomial t = ParamPolynomial::from_polynomial(target, table, -1);
  std::vector<ParamPolynomial> pgens;
  pgens.reserve(gens.size());
  for (const auto& g : gens)
    pgens.push_back(ParamPolynomial::from_polynomial(g, table, -1));
  LocalNFResult nf = truncated_local_nf(t, pgens, ord, hc);
  MembershipResult r;
  r.remainder = std::move(nf.remainder);
  r.member = r.remainder.empty();
  return r;
}

}  // namespace eqsing

#endif  // EQSING_REDUCTION_HPP
