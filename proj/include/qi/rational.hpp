#pragma once

/// \file rational.hpp
/// \brief Exact scalars: arbitrary-precision integers and rationals (GMP).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "qi/errors.hpp"

namespace qi {

using BigInt = mpz_class;
/// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline BigRational parse_rational(const std::string& num, const std::string& den) {
  BigInt n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw std::invalid_argument("malformed rational \"" + num + "/" + den + "\"");
  return make_rational(n, d);
}

inline std::string to_string(const BigRational& r) {
  return r.get_str(10);
}

inline BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace qi
