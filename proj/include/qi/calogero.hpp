#pragma once

/// \file calogero.hpp
/// \brief L_m = sum_i d_i^2 - 2m sum_{i<j} (x_i - x_j)^{-1} (d_i - d_j), with the
/// division carried out exactly in the polynomial ring.

#include "qi/hook_basis.hpp"

namespace qi {

struct LmOperator {
  std::size_t n = 1;
  unsigned m = 0;
};

/// Throws NonPolynomialError when some (d_i - d_j) p is not divisible by x_i - x_j.
inline MultiPoly apply_lm(const LmOperator& op, const MultiPoly& p) {
  if (p.nvars() != op.n)
    throw DimensionError("L_m on " + std::to_string(op.n) + " variables applied to a polynomial in " +
                         std::to_string(p.nvars()));
  const std::size_t n = op.n;
  std::vector<MultiPoly> grad;
  grad.reserve(n);
  MultiPoly out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    grad.push_back(partial_derivative(p, i));
    out += partial_derivative(grad.back(), i);
  }
  if (op.m == 0) return out;
  MultiPoly drift(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const auto q = divide_by_binomial_power(grad[i - 1] - grad[j - 1], i, j, 1);
      if (!q)
        throw NonPolynomialError("(d" + std::to_string(i) + " - d" + std::to_string(j) +
                                 ")p is not divisible by x" + std::to_string(i) + " - x" + std::to_string(j));
      drift += *q;
    }
  out -= drift * BigRational(2 * op.m);
  return out;
}

/// L_m Q^{k,m} - k(k-1) Q^{k-2,m}; zero by the eigen-identity.
inline MultiPoly lm_eigen_check(const HookSpec& s) {
  MultiPoly r = apply_lm({s.n, s.m}, q_integral(s));
  if (s.k >= 2) r -= q_integral(s.with_k(s.k - 2)) * BigRational(s.k * (s.k - 1));
  return r;
}

}  // namespace qi
