// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_ORDERING_HPP
#define EQSING_ORDERING_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsing/exponent.hpp"
#include "eqsing/rational.hpp"

namespace eqsing {

enum class OrderKind {
  Lex,        // lp
  DegLex,     // Dp
  WeightLex,  // Wp(w)
  NegLex,     // ls
  NegDegLex,  // Ds
  NegWeightLex  // Ws(w)
};

// Monomial ordering. Weighted kinds carry one exact rational weight per
// variable; weights must be positive and are never normalized.
class Ordering {
 public:
  static Ordering lp() { return Ordering(OrderKind::Lex, {}); }
  static Ordering Dp() { return Ordering(OrderKind::DegLex, {}); }
  static Ordering ls() { return Ordering(OrderKind::NegLex, {}); }
  static Ordering Ds() { return Ordering(OrderKind::NegDegLex, {}); }
  static Ordering Wp(std::vector<Q> w) {
    return Ordering(OrderKind::WeightLex, std::move(w));
  }
  static Ordering Ws(std::vector<Q> w) {
    return Ordering(OrderKind::NegWeightLex, std::move(w));
  }

  OrderKind kind() const { return kind_; }
  const std::vector<Q>& weights() const { return w_; }

  bool is_weighted() const {
    return kind_ == OrderKind::WeightLex || kind_ == OrderKind::NegWeightLex;
  }

  // Global means x^a > 1 for every a != 0; equivalently every variable
  // exceeds 1. Weighted kinds have positive weights by construction.
  bool is_global() const {
    switch (kind_) {
      case OrderKind::Lex:
      case OrderKind::DegLex:
      case OrderKind::WeightLex:
        return true;
      default:
        return false;
    }
  }

  Q weighted_degree(const Exponent& a) const {
    Q s = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (a[i] != 0) s += w_.at(i) * Q(static_cast<long>(a[i]));
    }
    return s;
  }

  // Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Exponent& a, const Exponent& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        return lex_cmp(a, b);
      case OrderKind::NegLex:
        return -lex_cmp(a, b);
      case OrderKind::DegLex: {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return lex_cmp(a, b);
      }
      case OrderKind::NegDegLex: {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
        return lex_cmp(a, b);
      }
      case OrderKind::WeightLex: {
        Q wa = weighted_degree(a), wb = weighted_degree(b);
        int c = cmp(wa, wb);
        if (c != 0) return c;
        return lex_cmp(a, b);
      }
      case OrderKind::NegWeightLex: {
        Q wa = weighted_degree(a), wb = weighted_degree(b);
        int c = cmp(wa, wb);
        if (c != 0) return -c;
        return lex_cmp(a, b);
      }
    }
    return 0;
  }

  bool less(const Exponent& a, const Exponent& b) const {
    return compare(a, b) < 0;
  }

  std::string str() const {
    switch (kind_) {
      case OrderKind::Lex:
        return "lp";
      case OrderKind::DegLex:
        return "Dp";
      case OrderKind::NegLex:
        return "ls";
      case OrderKind::NegDegLex:
        return "Ds";
      case OrderKind::WeightLex:
        return "Wp(" + weight_str() + ")";
      case OrderKind::NegWeightLex:
        return "Ws(" + weight_str() + ")";
    }
    return "?";
  }

  // Accepts "lp", "Dp", "ls", "Ds", "Wp(w1,...,wn)", "Ws(w1,...,wn)" with
  // rational weights such as 1/6.
  static Ordering parse(const std::string& s) {
    if (s == "lp") return lp();
    if (s == "Dp") return Dp();
    if (s == "ls") return ls();
    if (s == "Ds") return Ds();
    if ((s.rfind("Wp(", 0) == 0 || s.rfind("Ws(", 0) == 0) && s.back() == ')') {
      std::vector<Q> w;
      std::string body = s.substr(3, s.size() - 4);
      std::string cur;
      std::istringstream in(body);
      while (std::getline(in, cur, ',')) w.push_back(parse_rational(cur));
      if (w.empty()) throw std::invalid_argument("ordering without weights");
      return s[1] == 'p' ? Wp(std::move(w)) : Ws(std::move(w));
    }
    throw std::invalid_argument("unknown ordering: " + s);
  }

 private:
  Ordering(OrderKind k, std::vector<Q> w) : kind_(k), w_(std::move(w)) {
    if (is_weighted()) {
      if (w_.empty()) throw std::invalid_argument("weighted ordering needs weights");
      for (const Q& q : w_)
        if (q <= 0) throw std::invalid_argument("weights must be positive");
    }
  }

  static int cmp(const Q& a, const Q& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t()) < 0
               ? -1
               : (mpq_cmp(a.get_mpq_t(), b.get_mpq_t()) > 0 ? 1 : 0);
  }

  // Shared tie-break: at the first differing entry, the larger entry wins.
  static int lex_cmp(const Exponent& a, const Exponent& b) {
    if (a.nvars() != b.nvars()) throw std::logic_error("nvars mismatch");
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  std::string weight_str() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) s += ",";
      s += w_[i].get_str();
    }
    return s;
  }

  OrderKind kind_;
  std::vector<Q> w_;
};

}  // namespace eqsing

#endif  // EQSING_ORDERING_HPP
