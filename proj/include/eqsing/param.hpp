// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_PARAM_HPP
#define EQSING_PARAM_HPP

#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eqsing/polynomial.hpp"

namespace eqsing {

// Deformation parameters are named by the exponent vector of the slot they
// multiply; a[2,4] is the coefficient parameter of x1^2*x2^4. Ids are interned
// in first-come order, which derivations keep deterministic.
class ParamTable {
 public:
  uint32_t intern(const Exponent& slot) {
    auto it = index_.find(slot);
    if (it != index_.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(slots_.size());
    slots_.push_back(slot);
    index_.emplace(slot, id);
    return id;
  }

  bool contains(const Exponent& slot) const { return index_.count(slot) > 0; }

  uint32_t id_of(const Exponent& slot) const {
    auto it = index_.find(slot);
    if (it == index_.end()) throw std::logic_error("unknown parameter slot");
    return it->second;
  }

  const Exponent& slot(uint32_t id) const { return slots_.at(id); }
  std::size_t size() const { return slots_.size(); }

  std::string name(uint32_t id) const {
    const Exponent& e = slots_.at(id);
    std::string s = "a[";
    for (std::size_t i = 0; i < e.nvars(); ++i) {
      if (i) s += ",";
      s += std::to_string(e[i]);
    }
    return s + "]";
  }

 private:
  std::vector<Exponent> slots_;
  std::map<Exponent, uint32_t, CanonicalLess> index_;
};

using ParamTablePtr = std::shared_ptr<ParamTable>;

// Monomial in the parameters: sorted (id, exponent) pairs.
struct PMono {
  std::vector<std::pair<uint32_t, uint32_t>> factors;

  int64_t degree() const {
    int64_t d = 0;
    for (auto& [id, e] : factors) d += e;
    return d;
  }
  bool is_one() const { return factors.empty(); }
  uint32_t exponent_of(uint32_t id) const {
    for (auto& [i, e] : factors)
      if (i == id) return e;
    return 0;
  }
  bool operator<(const PMono& o) const { return factors < o.factors; }
  bool operator==(const PMono& o) const { return factors == o.factors; }

  static PMono one() { return PMono{}; }
  static PMono var(uint32_t id, uint32_t e = 1) {
    PMono m;
    if (e > 0) m.factors.emplace_back(id, e);
    return m;
  }

  PMono operator*(const PMono& o) const {
    PMono r;
    std::size_t i = 0, j = 0;
    while (i < factors.size() && j < o.factors.size()) {
      if (factors[i].first < o.factors[j].first) {
        r.factors.push_back(factors[i++]);
      } else if (factors[i].first > o.factors[j].first) {
        r.factors.push_back(o.factors[j++]);
      } else {
        r.factors.emplace_back(factors[i].first,
                               factors[i].second + o.factors[j].second);
        ++i;
        ++j;
      }
    }
    while (i < factors.size()) r.factors.push_back(factors[i++]);
    while (j < o.factors.size()) r.factors.push_back(o.factors[j++]);
    return r;
  }
};

// Polynomial in the parameters with exact rational coefficients. A cap on the
// total parameter degree, when nonnegative, makes every operation drop terms
// of higher degree; cap < 0 keeps everything.
class PPoly {
 public:
  using TermMap = std::map<PMono, Q>;

  PPoly() = default;
  static PPoly constant(const Q& c) {
    PPoly p;
    p.add_term(PMono::one(), c);
    return p;
  }
  static PPoly var(uint32_t id) {
    PPoly p;
    p.add_term(PMono::var(id), 1);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const PMono& m, const Q& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Q coeff(const PMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Q(0) : it->second;
  }
  Q constant_part() const { return coeff(PMono::one()); }
  Q linear_coeff(uint32_t id) const { return coeff(PMono::var(id)); }

  PPoly& operator+=(const PPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PPoly& operator-=(const PPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  PPoly operator+(const PPoly& o) const {
    PPoly r(*this);
    r += o;
    return r;
  }
  PPoly operator-(const PPoly& o) const {
    PPoly r(*this);
    r -= o;
    return r;
  }
  PPoly operator-() const {
    PPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  PPoly& operator*=(const Q& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  PPoly operator*(const Q& c) const {
    PPoly r(*this);
    r *= c;
    return r;
  }

  PPoly mul(const PPoly& o, int cap) const {
    PPoly r;
    for (const auto& [ma, ca] : terms_) {
      int64_t da = ma.degree();
      for (const auto& [mb, cb] : o.terms_) {
        if (cap >= 0 && da + mb.degree() > cap) continue;
        r.add_term(ma * mb, ca * cb);
      }
    }
    return r;
  }

  PPoly pow(unsigned e, int cap) const {
    PPoly r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r.mul(*this, cap);
    return r;
  }

  PPoly truncated(int cap) const {
    if (cap < 0) return *this;
    PPoly r;
    for (const auto& [m, c] : terms_)
      if (m.degree() <= cap) r.terms_.emplace(m, c);
    return r;
  }

  // Homogeneous part of the given parameter degree.
  PPoly part(int64_t deg) const {
    PPoly r;
    for (const auto& [m, c] : terms_)
      if (m.degree() == deg) r.terms_.emplace(m, c);
    return r;
  }

  int64_t degree() const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_)
      if (m.degree() > d) d = m.degree();
    return d;
  }
  int64_t min_degree() const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_) {
      int64_t md = m.degree();
      if (d < 0 || md < d) d = md;
    }
    return d;
  }

  // Minimum over terms of the degree counted only on ids selected by pred;
  // -1 for the zero polynomial. A value >= 2 certifies membership in the
  // square of the ideal generated by the selected parameters.
  int64_t min_degree_in(const std::function<bool(uint32_t)>& pred) const {
    int64_t best = -1;
    for (const auto& [m, c] : terms_) {
      int64_t d = 0;
      for (auto& [id, e] : m.factors)
        if (pred(id)) d += e;
      if (best < 0 || d < best) best = d;
    }
    return best;
  }

  bool contains_any(const std::set<uint32_t>& ids) const {
    for (const auto& [m, c] : terms_)
      for (auto& [id, e] : m.factors)
        if (ids.count(id)) return true;
    return false;
  }

  void collect_ids(std::set<uint32_t>& out) const {
    for (const auto& [m, c] : terms_)
      for (auto& [id, e] : m.factors) out.insert(id);
  }

  PPoly derivative(uint32_t id) const {
    PPoly r;
    for (const auto& [m, c] : terms_) {
      uint32_t e = m.exponent_of(id);
      if (e == 0) continue;
      PMono d;
      for (auto& [i, k] : m.factors) {
        if (i == id) {
          if (k > 1) d.factors.emplace_back(i, k - 1);
        } else {
          d.factors.emplace_back(i, k);
        }
      }
      r.add_term(d, c * Q(static_cast<long>(e)));
    }
    return r;
  }

  // Replaces parameter id by value; value may involve other parameters.
  PPoly substituted(uint32_t id, const PPoly& value, int cap) const {
    PPoly r;
    for (const auto& [m, c] : terms_) {
      uint32_t e = m.exponent_of(id);
      if (e == 0) {
        r.add_term(m, c);
        continue;
      }
      PMono rest;
      for (auto& [i, k] : m.factors)
        if (i != id) rest.factors.emplace_back(i, k);
      PPoly t;
      t.add_term(rest, c);
      r += t.mul(value.pow(e, cap), cap);
    }
    return r;
  }

  Q evaluate(const std::vector<Q>& values) const {
    Q s = 0;
    for (const auto& [m, c] : terms_) {
      Q t = c;
      for (auto& [id, e] : m.factors)
        t *= q_pow(values.at(id), e);
      s += t;
    }
    return s;
  }

  bool operator==(const PPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const PPoly& o) const { return !(*this == o); }

  std::string str(const ParamTable& table) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Q v = c;
      bool neg = v < 0;
      if (first) {
        if (neg) s += "-";
        first = false;
      } else {
        s += neg ? " - " : " + ";
      }
      if (neg) v = -v;
      std::string t;
      if (v != 1 || m.is_one()) t += v.get_str();
      for (auto& [id, e] : m.factors) {
        if (!t.empty()) t += "*";
        t += table.name(id);
        if (e > 1) t += "^" + std::to_string(e);
      }
      s += t;
    }
    return s;
  }

 private:
  TermMap terms_;
};

// Default parameter-degree cap; EQSING_MAX_PARAM_DEG overrides it ("none",
// "inf", or a negative value disables capping).
inline int default_param_cap() {
  const char* env = std::getenv("EQSING_MAX_PARAM_DEG");
  if (env == nullptr || *env == '\0') return 3;
  std::string s(env);
  if (s == "none" || s == "inf") return -1;
  int v = std::atoi(s.c_str());
  return v < 0 ? -1 : v;
}

// Polynomial in the x-variables whose coefficients are PPoly values. The
// parameter cap applies to every coefficient operation.
class ParamPolynomial {
 public:
  using CoeffMap = std::map<Exponent, PPoly, CanonicalLess>;

  ParamPolynomial() : nvars_(0), cap_(-1) {}
  ParamPolynomial(std::size_t nvars, ParamTablePtr table, int cap)
      : nvars_(nvars), cap_(cap), table_(std::move(table)) {}

  std::size_t nvars() const { return nvars_; }
  int cap() const { return cap_; }
  const ParamTablePtr& table() const { return table_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Exponent& e, const PPoly& c) {
    if (e.nvars() != nvars_) throw std::logic_error("nvars mismatch");
    PPoly t = c.truncated(cap_);
    if (t.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, std::move(t));
    } else {
      it->second += t;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  PPoly coeff(const Exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? PPoly() : it->second;
  }

  void erase(const Exponent& e) { coeffs_.erase(e); }

  ParamPolynomial& operator+=(const ParamPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  ParamPolynomial& operator-=(const ParamPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }

  // *this += s * x^shift * g, with x-degree cap when xmax >= 0.
  void axpy(const PPoly& s, const Exponent& shift, const ParamPolynomial& g,
            int64_t xmax = -1) {
    for (const auto& [e, c] : g.coeffs_) {
      Exponent t = e + shift;
      if (xmax >= 0 && t.degree() > xmax) continue;
      add(t, s.mul(c, cap_));
    }
  }

  ParamPolynomial mul(const ParamPolynomial& o, int64_t xmax = -1) const {
    ParamPolynomial r(nvars_, table_, cap_);
    for (const auto& [e, c] : coeffs_) r.axpy(c, e, o, xmax);
    return r;
  }

  ParamPolynomial pow(unsigned e, int64_t xmax = -1) const {
    ParamPolynomial r(nvars_, table_, cap_);
    r.add(Exponent(nvars_), PPoly::constant(1));
    for (unsigned i = 0; i < e; ++i) r = r.mul(*this, xmax);
    return r;
  }

  ParamPolynomial substitute_var(std::size_t var,
                                 const ParamPolynomial& replacement,
                                 int64_t xmax = -1) const {
    int32_t maxexp = 0;
    for (const auto& [e, c] : coeffs_)
      if (e[var] > maxexp) maxexp = e[var];
    std::vector<ParamPolynomial> powers;
    {
      ParamPolynomial one(nvars_, table_, cap_);
      one.add(Exponent(nvars_), PPoly::constant(1));
      powers.push_back(std::move(one));
    }
    for (int32_t i = 1; i <= maxexp; ++i)
      powers.push_back(powers.back().mul(replacement, xmax));
    ParamPolynomial r(nvars_, table_, cap_);
    for (const auto& [e, c] : coeffs_) {
      Exponent rest = e;
      rest[var] = 0;
      if (xmax >= 0 && rest.degree() > xmax) continue;
      r.axpy(c, rest, powers[static_cast<std::size_t>(e[var])], xmax);
    }
    return r;
  }

  // Rescales one variable: x_var -> s * x_var, i.e. the coefficient at
  // exponent e picks up s^(e[var]).
  void scale_var(std::size_t var, const PPoly& s) {
    CoeffMap out;
    std::vector<PPoly> powers{PPoly::constant(1)};
    for (auto& [e, c] : coeffs_) {
      auto k = static_cast<std::size_t>(e[var]);
      while (powers.size() <= k) powers.push_back(powers.back().mul(s, cap_));
      PPoly v = c.mul(powers[k], cap_);
      if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    coeffs_ = std::move(out);
  }

  ParamPolynomial partial_derivative(std::size_t var) const {
    ParamPolynomial r(nvars_, table_, cap_);
    for (const auto& [e, c] : coeffs_) {
      if (e[var] == 0) continue;
      Exponent d = e;
      d[var] -= 1;
      r.add(d, c * Q(static_cast<long>(e[var])));
    }
    return r;
  }

  ParamPolynomial x_jet(int64_t k) const {
    ParamPolynomial r(nvars_, table_, cap_);
    for (const auto& [e, c] : coeffs_)
      if (e.degree() <= k) r.coeffs_.emplace(e, c);
    return r;
  }

  // Drops every term whose weighted degree exceeds bound.
  void prune_weight_above(const std::vector<Q>& w, const Q& bound) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      Q wd = 0;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (it->first[i] != 0) wd += w[i] * Q(static_cast<long>(it->first[i]));
      if (wd > bound) {
        it = coeffs_.erase(it);
      } else {
        ++it;
      }
    }
  }

  Polynomial evaluate(const std::vector<Q>& values) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : coeffs_) r.add_term(e, c.evaluate(values));
    return r;
  }

  static ParamPolynomial from_polynomial(const Polynomial& p,
                                         ParamTablePtr table, int cap) {
    ParamPolynomial r(p.nvars(), std::move(table), cap);
    for (const auto& [e, c] : p.terms()) r.add(e, PPoly::constant(c));
    return r;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      std::string cs = it->second.str(*table_);
      bool wrap = it->second.term_count() > 1;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      if (mono.empty()) {
        s += wrap ? "(" + cs + ")" : cs;
      } else if (cs == "1") {
        s += mono;
      } else {
        s += (wrap ? "(" + cs + ")" : cs) + "*" + mono;
      }
    }
    return s;
  }

 private:
  std::size_t nvars_;
  int cap_;
  ParamTablePtr table_;
  CoeffMap coeffs_;
};

}  // namespace eqsing

#endif  // EQSING_PARAM_HPP
