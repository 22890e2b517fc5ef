#pragma once

/// \file multipoly.hpp
/// \brief Sparse multivariate polynomials over Q in variables x_1..x_n.
///
/// Terms are kept in a map keyed by exponent vector, ordered graded-lex
/// descending (higher total degree first, ties broken lexicographically with
/// x_1 > x_2 > ... > x_n). That order is also the canonical print order.
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Variables are 1-indexed in the public API.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qi/rational.hpp"

namespace qi {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return b < a;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, BigRational, GrlexGreater>;

  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw std::invalid_argument("MultiPoly needs at least one variable");
  }

  static MultiPoly constant(std::size_t nvars, const BigRational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static MultiPoly one(std::size_t nvars) { return constant(nvars, 1); }

  /// x_i, 1-indexed.
  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    p.check_var(i);
    Exponent e(nvars, 0);
    e[i - 1] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  static MultiPoly monomial(Exponent e, const BigRational& c = 1) {
    MultiPoly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first));
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  BigRational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  /// Leading term in graded-lex order. Precondition: nonzero.
  const TermMap::value_type& leading() const { return *terms_.begin(); }

  void add_term(Exponent e, const BigRational& c) {
    if (e.size() != nvars_) throw DimensionError("exponent length does not match nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const BigRational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= BigRational(-1); }
  friend MultiPoly operator*(MultiPoly a, const BigRational& s) { return a *= s; }
  friend MultiPoly operator*(const BigRational& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = one(nvars_);
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  void check_var(std::size_t i) const {
    if (i < 1 || i > nvars_)
      throw DimensionError("variable index " + std::to_string(i) + " outside 1.." +
                           std::to_string(nvars_));
  }

  void check_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_)
      throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                           std::to_string(o.nvars_) + " variables");
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

/// Formal partial derivative with respect to x_i.
inline MultiPoly partial_derivative(const MultiPoly& p, std::size_t i) {
  p.check_var(i);
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const unsigned a = e[i - 1];
    if (a == 0) continue;
    Exponent f = e;
    f[i - 1] = a - 1;
    r.add_term(std::move(f), c * a);
  }
  return r;
}

/// Simultaneous substitution x_i -> assignment[i]. Variables not in the map
/// are left alone.
inline MultiPoly substitute(const MultiPoly& p, const std::map<std::size_t, MultiPoly>& assignment) {
  const std::size_t n = p.nvars();
  for (const auto& [i, img] : assignment) {
    p.check_var(i);
    p.check_same(img);
  }
  // powers[i][a] = image_i^a, grown lazily
  std::map<std::size_t, std::vector<MultiPoly>> powers;
  for (const auto& [i, img] : assignment) powers[i].push_back(MultiPoly::one(n));

  MultiPoly r(n);
  for (const auto& [e, c] : p.terms()) {
    Exponent kept = e;
    MultiPoly factor = MultiPoly::one(n);
    for (auto& [i, pw] : powers) {
      const unsigned a = e[i - 1];
      kept[i - 1] = 0;
      while (pw.size() <= a) pw.push_back(pw.back() * assignment.at(i));
      if (a > 0) factor *= pw[a];
    }
    r += factor * MultiPoly::monomial(std::move(kept), c);
  }
  return r;
}

/// The linear change of variables x_i -> x_i + sign * x_j (i != j). With
/// sign = +1 the slot of x_i afterwards plays the role of u = x_i - x_j.
inline MultiPoly shift_variable(const MultiPoly& p, std::size_t i, std::size_t j, int sign) {
  p.check_var(i);
  p.check_var(j);
  if (i == j) throw std::invalid_argument("shift_variable needs distinct variables");
  MultiPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    const unsigned a = e[i - 1];
    for (unsigned s = 0; s <= a; ++s) {
      // (x_i + sign x_j)^a = sum_s C(a,s) x_i^s (sign x_j)^(a-s)
      Exponent f = e;
      f[i - 1] = s;
      f[j - 1] += a - s;
      BigRational coef = c * BigRational(binomial(a, s));
      if (sign < 0 && (a - s) % 2 == 1) coef = -coef;
      r.add_term(std::move(f), coef);
    }
  }
  return r;
}

/// Largest s with (x_i - x_j)^s | p. Returns nullopt for p = 0.
inline std::optional<unsigned> binomial_valuation(const MultiPoly& p, std::size_t i, std::size_t j) {
  if (p.is_zero()) return std::nullopt;
  const MultiPoly shifted = shift_variable(p, i, j, +1);
  unsigned v = ~0u;
  for (const auto& [e, c] : shifted.terms()) v = std::min(v, e[i - 1]);
  return v;
}

/// Exact division by (x_i - x_j)^s via x_i = x_j + u: require u-adic
/// valuation >= s, strip u^s, substitute back.
inline std::optional<MultiPoly> divide_by_binomial_power(const MultiPoly& p, std::size_t i,
                                                         std::size_t j, unsigned s) {
  if (s == 0 || p.is_zero()) return p;
  const MultiPoly shifted = shift_variable(p, i, j, +1);
  MultiPoly stripped(p.nvars());
  for (const auto& [e, c] : shifted.terms()) {
    if (e[i - 1] < s) return std::nullopt;
    Exponent f = e;
    f[i - 1] -= s;
    stripped.add_term(std::move(f), c);
  }
  return shift_variable(stripped, i, j, -1);
}

/// Factor (x_a - x_b)^power.
struct BinomialFactor {
  std::size_t a;
  std::size_t b;
  unsigned power;
};

/// Exact division by c * prod (x_a - x_b)^power for pairwise distinct
/// unordered pairs {a,b}. Distinct binomials are coprime, so dividing them
/// out one at a time decides divisibility by the product.
inline std::optional<MultiPoly> divide_by_binomial_product(const MultiPoly& p,
                                                           const std::vector<BinomialFactor>& factors,
                                                           const BigRational& c = 1) {
  if (c == 0) throw std::domain_error("division by zero polynomial");
  std::optional<MultiPoly> q = p;
  for (const auto& f : factors) {
    q = divide_by_binomial_power(*q, f.a, f.b, f.power);
    if (!q) return std::nullopt;
  }
  *q *= BigRational(1) / c;
  return q;
}

/// Exact division p / d in Q[x_1..x_n]: nullopt when d does not divide p.
/// Uses the one-divisor division algorithm in graded-lex order; for a single
/// divisor the remainder is zero exactly when d | p, so a leading term that
/// the divisor's leading term cannot absorb already proves non-divisibility.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  p.check_same(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& [dexp, dcoef] = d.leading();
  MultiPoly q(p.nvars());
  MultiPoly r = p;
  while (!r.is_zero()) {
    const auto& [rexp, rcoef] = r.leading();
    Exponent diff(p.nvars());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (rexp[i] < dexp[i]) return std::nullopt;
      diff[i] = rexp[i] - dexp[i];
    }
    const MultiPoly t = MultiPoly::monomial(std::move(diff), rcoef / dcoef);
    r -= t * d;
    q += t;
  }
  return q;
}

/// e_i(x_1..x_n), with e_0 = 1.
inline MultiPoly elementary_symmetric(std::size_t n, std::size_t i) {
  if (i > n) throw std::out_of_range("e_" + std::to_string(i) + " undefined for n=" + std::to_string(n));
  MultiPoly r(n);
  // walk all 0/1 vectors with exactly i ones
  std::vector<unsigned> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(i), 1u);
  do {
    r.add_term(mask, 1);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return r;
}

inline MultiPoly binomial_difference(std::size_t n, std::size_t a, std::size_t b) {
  return MultiPoly::variable(n, a) - MultiPoly::variable(n, b);
}

/// prod_{i<j} (x_i - x_j)
inline MultiPoly vandermonde(std::size_t n) {
  MultiPoly r = MultiPoly::one(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) r *= binomial_difference(n, i, j);
  return r;
}

/// Expanded text form, e.g. "x1^3 - 3*x1^2*x2 + 1/2*x2".
inline std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = total_degree(e) == 0;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace qi
