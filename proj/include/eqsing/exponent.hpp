// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_EXPONENT_HPP
#define EQSING_EXPONENT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqsing {

// Exponent vector of one monomial x1^e1 ... xn^en. The number of variables is
// fixed by context; mixing lengths in one operation is a logic error.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
  Exponent(std::initializer_list<int> xs) {
    e_.reserve(xs.size());
    for (int x : xs) e_.push_back(check_entry(x));
  }
  explicit Exponent(const std::vector<int>& xs) {
    e_.reserve(xs.size());
    for (int x : xs) e_.push_back(check_entry(x));
  }

  std::size_t nvars() const { return e_.size(); }
  int32_t operator[](std::size_t i) const { return e_[i]; }
  int32_t& operator[](std::size_t i) { return e_[i]; }

  int64_t degree() const {
    return std::accumulate(e_.begin(), e_.end(), int64_t{0});
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int32_t v) { return v == 0; });
  }

  // Number of nonzero entries.
  int support_size() const {
    int c = 0;
    for (auto v : e_)
      if (v != 0) ++c;
    return c;
  }

  bool divides(const Exponent& other) const {
    if (nvars() != other.nvars()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Exponent operator+(const Exponent& o) const {
    Exponent r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  // Componentwise difference; caller guarantees divisibility.
  Exponent operator-(const Exponent& o) const {
    Exponent r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) throw std::logic_error("negative exponent");
    }
    return r;
  }

  bool operator==(const Exponent& o) const { return e_ == o.e_; }
  bool operator!=(const Exponent& o) const { return e_ != o.e_; }

  // Plain lexicographic order on entries; used for canonical container keys.
  bool lex_less(const Exponent& o) const { return e_ < o.e_; }

  const std::vector<int32_t>& entries() const { return e_; }

  static Exponent unit(std::size_t nvars, std::size_t i, int32_t e = 1) {
    Exponent r(nvars);
    r[i] = e;
    return r;
  }

  // Embeds into a larger variable count, padding with zeros on the right.
  Exponent extended(std::size_t new_nvars) const {
    if (new_nvars < nvars()) throw std::logic_error("cannot shrink exponent");
    Exponent r(new_nvars);
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i];
    return r;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    s += ")";
    return s;
  }

 private:
  static int32_t check_entry(int v) {
    if (v < 0) throw std::invalid_argument("negative exponent entry");
    return static_cast<int32_t>(v);
  }
  std::vector<int32_t> e_;
};

// Canonical order for term storage: total degree first, then lexicographic.
// Printing walks this order in reverse so output is degree-descending.
struct CanonicalLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.lex_less(b);
  }
};

}  // namespace eqsing

#endif  // EQSING_EXPONENT_HPP
