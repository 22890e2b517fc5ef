#pragma once

/// \file group_algebra.hpp
/// \brief The group algebra QS_n: finite Q-linear combinations of permutations.

#include <map>
#include <string>
#include <vector>

#include "qi/perm.hpp"

namespace qi {

class GroupAlgebraElem {
 public:
  using TermMap = std::map<Perm, BigRational>;

  explicit GroupAlgebraElem(std::size_t n) : n_(n) {}

  static GroupAlgebraElem identity(std::size_t n) { return from_perm(Perm::identity(n)); }

  static GroupAlgebraElem from_perm(const Perm& p, const BigRational& c = 1) {
    GroupAlgebraElem g(p.size());
    g.add_term(p, c);
    return g;
  }

  std::size_t degree() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigRational coefficient(const Perm& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  void add_term(const Perm& p, const BigRational& c) {
    if (p.size() != n_) throw DimensionError("permutation degree does not match group algebra");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupAlgebraElem& operator+=(const GroupAlgebraElem& o) {
    check_same(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }

  GroupAlgebraElem& operator-=(const GroupAlgebraElem& o) {
    check_same(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
  }

  GroupAlgebraElem& operator*=(const BigRational& s) {
    if (s == 0) terms_.clear();
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  friend GroupAlgebraElem operator+(GroupAlgebraElem a, const GroupAlgebraElem& b) { return a += b; }
  friend GroupAlgebraElem operator-(GroupAlgebraElem a, const GroupAlgebraElem& b) { return a -= b; }
  friend GroupAlgebraElem operator*(GroupAlgebraElem a, const BigRational& s) { return a *= s; }
  friend GroupAlgebraElem operator*(const BigRational& s, GroupAlgebraElem a) { return a *= s; }

  /// Convolution product; (ab)P = a(bP) on polynomials.
  friend GroupAlgebraElem operator*(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
    a.check_same(b);
    GroupAlgebraElem r(a.n_);
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) r.add_term(pa * pb, ca * cb);
    return r;
  }

  friend bool operator==(const GroupAlgebraElem&, const GroupAlgebraElem&) = default;

  /// e.g. "1 - (1,2) + 2/3·(1,2,3)"
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      BigRational mag = abs(c);
      if (first) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      first = false;
      if (p.is_identity()) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += mag.get_str() + "·";
        s += p.to_string();
      }
    }
    return s;
  }

  void check_same(const GroupAlgebraElem& o) const {
    if (o.n_ != n_) throw DimensionError("group algebra elements of different degree");
  }

 private:
  std::size_t n_;
  TermMap terms_;
};

/// f(P) = sum_sigma f_sigma (sigma P)
inline MultiPoly apply(const GroupAlgebraElem& f, const MultiPoly& p) {
  if (f.degree() != p.nvars()) throw DimensionError("group algebra degree does not match nvars");
  MultiPoly r(p.nvars());
  for (const auto& [s, c] : f.terms()) r += act(s, p) * c;
  return r;
}

/// [U] = sum_{sigma in S_U} sigma, or the signed sum [U]'.
inline GroupAlgebraElem bracket(std::size_t n, const std::vector<int>& subset, bool is_signed) {
  if (subset.empty()) throw std::invalid_argument("bracket of an empty set");
  GroupAlgebraElem g(n);
  for (const auto& s : symmetric_group_on(n, subset)) g.add_term(s, is_signed ? s.sign() : 1);
  return g;
}

/// (1 ± (i1,i2)) (1 ± (i1,i3) ± (i2,i3)) ... (1 ± (i1,in) ± ... ± (i_{n-1},in)),
/// which telescopes to [S_n] (unsigned) or [S_n]' (signed) for any ordering.
inline GroupAlgebraElem sn_factorization(const std::vector<int>& order, bool is_signed) {
  const std::size_t n = order.size();
  static_cast<void>(Perm(order));  // order must be a permutation of 1..n
  const BigRational s = is_signed ? -1 : 1;
  GroupAlgebraElem product = GroupAlgebraElem::identity(n);
  for (std::size_t last = 1; last < n; ++last) {
    GroupAlgebraElem factor = GroupAlgebraElem::identity(n);
    for (std::size_t earlier = 0; earlier < last; ++earlier)
      factor.add_term(Perm::transposition(n, order[earlier], order[last]), s);
    product = product * factor;
  }
  return product;
}

}  // namespace qi
