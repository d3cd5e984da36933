// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_PARSE_HPP
#define EQSING_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsing/param.hpp"
#include "eqsing/polynomial.hpp"

namespace eqsing {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

// Recursive-descent reader for the term grammar
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'x'<k>['^'<e>] | 'a' '[' i1,...,ik ']' ['^'<e>]
// Parameters are rejected unless a table is supplied.
class PolyReader {
 public:
  PolyReader(const std::string& s, std::size_t nvars, ParamTable* table)
      : s_(s), nvars_(nvars), table_(table) {}

  void run(const std::function<void(const Exponent&, const PMono&, const Q&)>&
               emit) {
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", pos_);
    bool neg = accept_sign();
    read_term(emit, neg);
    skip_ws();
    while (!eof()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      read_term(emit, c == '-');
      skip_ws();
    }
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept_sign() {
    skip_ws();
    if (!eof() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      return neg;
    }
    return false;
  }

  long read_uint() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected digit", pos_);
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return v;
  }

  int read_power() {
    skip_ws();
    if (!eof() && s_[pos_] == '^') {
      ++pos_;
      long e = read_uint();
      if (e > 1 << 20) throw ParseError("exponent too large", pos_);
      return static_cast<int>(e);
    }
    return 1;
  }

  void read_term(
      const std::function<void(const Exponent&, const PMono&, const Q&)>& emit,
      bool neg) {
    Exponent xe(nvars_);
    PMono pm;
    Q coeff = neg ? -1 : 1;
    bool any = false;
    for (;;) {
      skip_ws();
      if (eof()) break;
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t at = pos_;
        long num = read_uint();
        Q v(num);
        skip_ws();
        if (!eof() && s_[pos_] == '/') {
          ++pos_;
          long den = read_uint();
          if (den == 0) throw ParseError("zero denominator", at);
          v = Q(num, den);
          v.canonicalize();
        }
        coeff *= v;
        any = true;
      } else if (c == 'x') {
        ++pos_;
        long idx = read_uint();
        if (idx < 1 || static_cast<std::size_t>(idx) > nvars_)
          throw ParseError("variable index out of range", pos_);
        int e = read_power();
        xe[static_cast<std::size_t>(idx - 1)] += e;
        any = true;
      } else if (c == 'a' && pos_ + 1 < s_.size() && peek_bracket()) {
        if (table_ == nullptr)
          throw ParseError("parameters not allowed here", pos_);
        ++pos_;  // 'a'
        ++pos_;  // '['
        std::vector<int> idxs;
        for (;;) {
          idxs.push_back(static_cast<int>(read_uint()));
          skip_ws();
          if (!eof() && s_[pos_] == ',') {
            ++pos_;
            continue;
          }
          break;
        }
        skip_ws();
        if (eof() || s_[pos_] != ']') throw ParseError("expected ']'", pos_);
        ++pos_;
        int e = read_power();
        uint32_t id = table_->intern(Exponent(idxs));
        pm = pm * PMono::var(id, static_cast<uint32_t>(e));
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (!eof() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("expected term", pos_);
    emit(xe, pm, coeff);
  }

  bool peek_bracket() {
    std::size_t p = pos_ + 1;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p])))
      ++p;
    return p < s_.size() && s_[p] == '[';
  }

  const std::string& s_;
  std::size_t nvars_;
  ParamTable* table_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& s, std::size_t nvars) {
  Polynomial p(nvars);
  detail::PolyReader reader(s, nvars, nullptr);
  reader.run([&](const Exponent& e, const PMono&, const Q& c) {
    p.add_term(e, c);
  });
  return p;
}

inline ParamPolynomial parse_param_polynomial(const std::string& s,
                                              std::size_t nvars,
                                              ParamTablePtr table, int cap) {
  ParamPolynomial p(nvars, table, cap);
  detail::PolyReader reader(s, nvars, table.get());
  reader.run([&](const Exponent& e, const PMono& m, const Q& c) {
    PPoly cp;
    cp.add_term(m, c);
    p.add(e, cp);
  });
  return p;
}

}  // namespace eqsing

#endif  // EQSING_PARSE_HPP
