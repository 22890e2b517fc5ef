#pragma once

/// \file errors.hpp
/// \brief Exception types shared by the library.

#include <stdexcept>

namespace qi {

/// Operands live in polynomial rings / groups of different size.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a desk-scale guardrail.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (e.g. embedding a polynomial
/// that is not quasiinvariant).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity the library checks at runtime came out false.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Calogero-Moser operator left the polynomial ring.
class NonPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qi
