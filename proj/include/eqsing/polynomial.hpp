// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_POLYNOMIAL_HPP
#define EQSING_POLYNOMIAL_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsing/exponent.hpp"
#include "eqsing/ordering.hpp"
#include "eqsing/rational.hpp"

namespace eqsing {

// Sparse multivariate polynomial over Q. Terms are stored under the
// canonical order (degree, then lex) so iteration and printing are
// deterministic; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Q, CanonicalLess>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Q& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars), c);
    return p;
  }
  static Polynomial monomial(const Exponent& e, const Q& c = 1) {
    Polynomial p(e.nvars());
    p.add_term(e, c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    return monomial(Exponent::unit(nvars, i));
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponent& e, const Q& c) {
    if (c == 0) return;
    if (e.nvars() != nvars_) throw std::logic_error("nvars mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Q coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Q(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Polynomial& operator*=(const Q& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  Polynomial operator*(const Q& c) const {
    Polynomial r(*this);
    r *= c;
    return r;
  }

  // Product, optionally truncated to total degree <= maxdeg (maxdeg < 0
  // disables truncation).
  Polynomial mul(const Polynomial& o, int64_t maxdeg = -1) const {
    require_same(o);
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_) {
      int64_t da = ea.degree();
      for (const auto& [eb, cb] : o.terms_) {
        if (maxdeg >= 0 && da + eb.degree() > maxdeg) continue;
        r.add_term(ea + eb, ca * cb);
      }
    }
    return r;
  }
  Polynomial operator*(const Polynomial& o) const { return mul(o); }

  Polynomial pow(unsigned e, int64_t maxdeg = -1) const {
    Polynomial r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r = r.mul(*this, maxdeg);
    return r;
  }

  Polynomial shifted(const Exponent& by) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  Polynomial partial_derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      d[var] -= 1;
      r.add_term(d, c * Q(static_cast<long>(e[var])));
    }
    return r;
  }

  // Truncation to total degree <= k.
  Polynomial jet(int64_t k) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (e.degree() <= k) r.terms_.emplace(e, c);
    return r;
  }

  int64_t degree() const {
    int64_t d = -1;
    for (const auto& [e, c] : terms_)
      if (e.degree() > d) d = e.degree();
    return d;
  }

  // Minimal total degree of a term (order of vanishing at 0); -1 for zero.
  int64_t order() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();
  }

  Exponent leading_exponent(const Ordering& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    const Exponent* best = &terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      if (ord.compare(e, *best) > 0) best = &e;
    return *best;
  }

  Q leading_coeff(const Ordering& ord) const {
    return terms_.at(leading_exponent(ord));
  }

  // Substitutes replacement for variable var; optional total-degree cap.
  Polynomial substitute(std::size_t var, const Polynomial& replacement,
                        int64_t maxdeg = -1) const {
    require_same(replacement);
    int32_t maxexp = 0;
    for (const auto& [e, c] : terms_)
      if (e[var] > maxexp) maxexp = e[var];
    std::vector<Polynomial> powers;
    powers.push_back(constant(nvars_, 1));
    for (int32_t i = 1; i <= maxexp; ++i)
      powers.push_back(powers.back().mul(replacement, maxdeg));
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent rest = e;
      rest[var] = 0;
      Polynomial t = powers[static_cast<std::size_t>(e[var])].shifted(rest) * c;
      if (maxdeg >= 0) t = t.jet(maxdeg);
      r += t;
    }
    return r;
  }

  Q evaluate(const std::vector<Q>& point) const {
    if (point.size() != nvars_) throw std::logic_error("point size mismatch");
    Q s = 0;
    for (const auto& [e, c] : terms_) {
      Q t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] != 0) t *= q_pow(point[i], static_cast<unsigned long>(e[i]));
      s += t;
    }
    return s;
  }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Degree-descending rendering, e.g. "x1^6 + x2^5 - 2/3*x1*x2^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Q c = it->second;
      bool neg = c < 0;
      if (first) {
        if (neg) s += "-";
        first = false;
      } else {
        s += neg ? " - " : " + ";
      }
      if (neg) c = -c;
      s += render_term(c, it->first);
    }
    return s;
  }

 private:
  void require_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("nvars mismatch");
  }

  static std::string render_term(const Q& c, const Exponent& e) {
    std::string s;
    bool coeff_shown = (c != 1) || e.is_zero();
    if (coeff_shown) s += c.get_str();
    for (std::size_t i = 0; i < e.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  std::size_t nvars_;
  TermMap terms_;
};

inline Polynomial operator*(const Q& c, const Polynomial& p) { return p * c; }

}  // namespace eqsing

#endif  // EQSING_POLYNOMIAL_HPP
