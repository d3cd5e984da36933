// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_RATIONAL_HPP
#define EQSING_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqsing {

// Exact rational scalar. All arithmetic in the library is exact; there is no
// floating-point fallback anywhere.
using Q = mpq_class;
using Z = mpz_class;

inline Q q_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Q r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Q r(s, 10);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (...) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

inline std::string to_string(const Q& q) { return q.get_str(); }

inline Q q_pow(const Q& base, unsigned long e) {
  Q num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(num.get_den_mpz_t(), base.get_den_mpz_t(), e);
  num.canonicalize();
  return num;
}

inline Z z_binomial(unsigned long n, unsigned long k) {
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Generalized binomial coefficient C(a, k) for rational a: a(a-1)...(a-k+1)/k!.
inline Q q_binomial(const Q& a, unsigned long k) {
  Q num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= (a - Q(static_cast<long>(i)));
  Z fact;
  mpz_fac_ui(fact.get_mpz_t(), k);
  Q r = num / Q(fact);
  r.canonicalize();
  return r;
}

}  // namespace eqsing

#endif  // EQSING_RATIONAL_HPP
