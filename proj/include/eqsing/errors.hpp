// Copyright (c) 2026 The eqsing Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef EQSING_ERRORS_HPP
#define EQSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqsing {

// Input is well-formed but outside the domain of the requested operation
// (wrong ordering class, non-cofinite leading ideal, invalid exponent data).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A reduction step needed to divide by a coefficient that is not a nonzero
// rational constant.
class NonConstantPivot : public DomainError {
 public:
  explicit NonConstantPivot(const std::string& msg) : DomainError(msg) {}
};

// An h1 sequence with a negative consecutive difference cannot be a
// Castelnuovo profile.
class InvalidProfile : public DomainError {
 public:
  explicit InvalidProfile(const std::string& msg) : DomainError(msg) {}
};

// A derivation entry point was called on a spec that belongs to the other
// exponent regime.
class CaseMismatch : public DomainError {
 public:
  explicit CaseMismatch(const std::string& msg) : DomainError(msg) {}
};

// A certificate search exhausted its budget without a positive or negative
// answer.
class CertificateInconclusive : public std::runtime_error {
 public:
  explicit CertificateInconclusive(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace eqsing

#endif  // EQSING_ERRORS_HPP
