#pragma once

/// \file hook_basis.hpp
/// \brief The polynomials Q^{k,m}_T = \int_{x_1}^{x_j} t^k prod_i (t - x_i)^m dt
/// for the hook tableau T with second-row entry j, built two ways (termwise
/// integration and a closed-form expansion in powers of x_2 - x_1), together
/// with the identities they satisfy.

#include <string>
#include <vector>

#include "qi/quasi.hpp"
#include "qi/tpoly.hpp"

namespace qi {

inline constexpr std::size_t kMaxHookN = 8;

struct HookSpec {
  std::size_t n = 2;
  unsigned m = 0;
  std::size_t j = 2;
  unsigned k = 0;

  void validate() const {
    if (n < 2) throw std::invalid_argument("hook basis needs n >= 2 (got " + std::to_string(n) + ")");
    if (n > kMaxHookN) throw ResourceError("hook basis limited to n <= " + std::to_string(kMaxHookN));
    if (j < 2 || j > n)
      throw std::invalid_argument("second-row entry j must satisfy 2 <= j <= n (got " + std::to_string(j) + ")");
  }

  Tableau tableau() const { return hook_tableau(static_cast<int>(n), static_cast<int>(j)); }
  unsigned degree() const { return m * static_cast<unsigned>(n) + k + 1; }
  HookSpec with_k(unsigned kk) const { return {n, m, j, kk}; }
  HookSpec with_m(unsigned mm) const { return {n, mm, j, k}; }
  std::string to_string() const {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " j=" + std::to_string(j) +
           " k=" + std::to_string(k);
  }
};

/// Termwise integration of t^k prod_i (t - x_i)^m from x_1 to x_j.
inline MultiPoly q_integral(const HookSpec& s) {
  s.validate();
  TPoly integrand = TPoly::t_power(s.n, s.k);
  for (std::size_t i = 1; i <= s.n; ++i) integrand = integrand * TPoly::t_minus(s.n, i).pow(s.m);
  return integrate_definite(integrand, 1, s.j);
}

namespace detail {

/// (x_j^{k+1} - x_1^{k+1}) / (k+1)
inline MultiPoly q_m_zero(std::size_t n, std::size_t j, unsigned k) {
  return (MultiPoly::variable(n, j).pow(k + 1) - MultiPoly::variable(n, 1).pow(k + 1)) *
         make_rational(1, static_cast<long>(k) + 1);
}

/// Closed form for j = 2. With t = x_1 + u and z = x_2 - x_1,
///   Q = sum_{i_3..i_n in 0..m} (-1)^{m + sum i} prod C(m, i_t) x_t^{i_t}
///         sum_{R=0}^{K} C(K, R) x_1^{K-R} z^r m! / (r (r-1) ... (r-m)),
/// where K = k + m(n-2) - sum i and r = R + 2m + 1.
inline MultiPoly q_closed_form_j2(std::size_t n, unsigned m, unsigned k) {
  const MultiPoly z = binomial_difference(n, 2, 1);
  const BigInt mfact = factorial(m);
  std::vector<MultiPoly> zpow{MultiPoly::one(n)};
  auto z_to = [&](unsigned r) -> const MultiPoly& {
    while (zpow.size() <= r) zpow.push_back(zpow.back() * z);
    return zpow[r];
  };

  MultiPoly out(n);
  std::vector<unsigned> idx(n > 2 ? n - 2 : 0, 0);
  while (true) {
    unsigned sum_i = 0;
    BigRational outer = 1;
    Exponent base(n, 0);
    for (std::size_t t = 0; t < idx.size(); ++t) {
      sum_i += idx[t];
      outer *= binomial(m, idx[t]);
      base[t + 2] = idx[t];
    }
    if ((m + sum_i) % 2 == 1) outer = -outer;
    const unsigned kk = k + m * static_cast<unsigned>(n - 2) - sum_i;
    for (unsigned rr = 0; rr <= kk; ++rr) {
      const unsigned r = rr + 2 * m + 1;
      BigInt falling = 1;  // r (r-1) ... (r-m)
      for (unsigned q = 0; q <= m; ++q) falling *= r - q;
      Exponent e = base;
      e[0] = kk - rr;
      const BigRational c = outer * BigRational(binomial(kk, rr)) * make_rational(mfact, falling);
      out += MultiPoly::monomial(std::move(e), c) * z_to(r);
    }
    // next multi-index
    std::size_t pos = 0;
    while (pos < idx.size() && idx[pos] == m) idx[pos++] = 0;
    if (pos == idx.size()) break;
    ++idx[pos];
  }
  return out;
}

}  // namespace detail

/// Closed-form expansion; general j is the (2,j)-image of the j = 2 polynomial.
inline MultiPoly q_closed_form(const HookSpec& s) {
  s.validate();
  if (s.m == 0) return detail::q_m_zero(s.n, s.j, s.k);
  MultiPoly q = detail::q_closed_form_j2(s.n, s.m, s.k);
  if (s.j != 2) q = act(Perm::transposition(s.n, 2, static_cast<int>(s.j)), q);
  return q;
}

/// Q^{k,m} - sum_{i=0}^n (-1)^i e_i Q^{n-i+k, m-1}; zero for m >= 1.
inline MultiPoly recursion_residual(const HookSpec& s) {
  s.validate();
  if (s.m == 0) throw std::invalid_argument("recursion needs m >= 1");
  MultiPoly r = q_integral(s);
  for (std::size_t i = 0; i <= s.n; ++i) {
    const HookSpec lower{s.n, s.m - 1, s.j, static_cast<unsigned>(s.n - i) + s.k};
    MultiPoly term = elementary_symmetric(s.n, i) * q_integral(lower);
    if (i % 2 == 0) r -= term;
    else r += term;
  }
  return r;
}

inline bool gamma_fixed_check(const HookSpec& s) {
  const MultiPoly q = q_integral(s);
  return apply(gamma(s.tableau()), q) == q;
}

/// Q / (x_j - x_1)^{2m+1} evaluated at x_1 = x_j.
inline MultiPoly lowest_quotient(const HookSpec& s) {
  const MultiPoly q = q_integral(s);
  const auto quotient = divide_by_binomial_power(q, s.j, 1, 2 * s.m + 1);
  if (!quotient)
    throw TheoremViolation("(x_j - x_1)^(2m+1) does not divide Q for " + s.to_string());
  return substitute(*quotient, {{1, MultiPoly::variable(s.n, s.j)}});
}

/// (-1)^m m!^2 / (2m+1)! * x_j^k * prod_{i != 1, j} (x_j - x_i)^m
inline MultiPoly lowest_quotient_rhs(const HookSpec& s) {
  s.validate();
  BigRational c = make_rational(factorial(s.m) * factorial(s.m), factorial(2 * s.m + 1));
  if (s.m % 2 == 1) c = -c;
  MultiPoly r = MultiPoly::variable(s.n, s.j).pow(s.k) * c;
  for (std::size_t i = 2; i <= s.n; ++i)
    if (i != s.j) r *= binomial_difference(s.n, s.j, i).pow(s.m);
  return r;
}

/// [Q^{0,m}, ..., Q^{n-2,m}] for the hook tableau with second-row entry j.
/// With `verify`, each element is also built by integration and checked for
/// equality, membership in gamma_T R ∩ V_T^{2m+1} R and quasiinvariance.
inline std::vector<MultiPoly> hook_basis(std::size_t n, unsigned m, std::size_t j, bool verify = false) {
  std::vector<MultiPoly> out;
  const HookSpec base{n, m, j, 0};
  base.validate();
  const Tableau t = base.tableau();
  for (unsigned k = 0; k + 2 <= n; ++k) {
    const HookSpec s = base.with_k(k);
    MultiPoly q = q_closed_form(s);
    if (q.degree() != static_cast<int>(s.degree()) || !q.is_homogeneous())
      throw TheoremViolation("Q is not homogeneous of degree mn+k+1 for " + s.to_string());
    if (verify) {
      if (q != q_integral(s)) throw TheoremViolation("closed form differs from integral for " + s.to_string());
      if (!in_gamma_component(q, t, m)) throw TheoremViolation("Q outside gamma_T R ∩ V_T^(2m+1) R for " + s.to_string());
      if (!is_quasiinvariant(q, m)) throw TheoremViolation("Q not quasiinvariant for " + s.to_string());
    }
    out.push_back(std::move(q));
  }
  if (poly_rank(out) != out.size()) throw TheoremViolation("hook basis is linearly dependent");
  return out;
}

}  // namespace qi
