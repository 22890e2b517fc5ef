#pragma once

/// \file tpoly.hpp
/// \brief Polynomials in an auxiliary variable t with coefficients in
/// Q[x_1..x_n], stored densely in t. Used for integrands of the form
/// t^k prod (t - x_i)^m and their definite integrals between two x's.

#include <cstddef>
#include <vector>

#include "qi/multipoly.hpp"

namespace qi {

class TPoly {
 public:
  explicit TPoly(std::size_t nvars) : nvars_(nvars) {}

  /// Constant in t.
  explicit TPoly(const MultiPoly& c) : nvars_(c.nvars()) {
    if (!c.is_zero()) coeffs_.push_back(c);
  }

  TPoly(std::size_t nvars, std::vector<MultiPoly> coeffs) : nvars_(nvars), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (c.nvars() != nvars_) throw DimensionError("TPoly coefficient nvars mismatch");
    trim();
  }

  static TPoly one(std::size_t nvars) { return TPoly(MultiPoly::one(nvars)); }

  /// t^k
  static TPoly t_power(std::size_t nvars, unsigned k) {
    std::vector<MultiPoly> c(k + 1, MultiPoly(nvars));
    c[k] = MultiPoly::one(nvars);
    return TPoly(nvars, std::move(c));
  }

  /// t - x_i
  static TPoly t_minus(std::size_t nvars, std::size_t i) {
    return TPoly(nvars, {-MultiPoly::variable(nvars, i), MultiPoly::one(nvars)});
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  MultiPoly coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : MultiPoly(nvars_); }

  TPoly& operator+=(const TPoly& o) {
    check_same(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), MultiPoly(nvars_));
    for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    trim();
    return *this;
  }

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }

  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return TPoly(a.nvars_);
    std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly(a.nvars_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TPoly(a.nvars_, std::move(c));
  }

  friend TPoly operator*(const MultiPoly& s, const TPoly& f) { return TPoly(s) * f; }

  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

  TPoly pow(unsigned k) const {
    TPoly r = one(nvars_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  void check_same(const TPoly& o) const {
    if (o.nvars_ != nvars_) throw DimensionError("TPoly nvars mismatch");
  }

  std::size_t nvars_;
  std::vector<MultiPoly> coeffs_;
};

/// \int_{x_lower}^{x_upper} f dt, termwise.
inline MultiPoly integrate_definite(const TPoly& f, std::size_t lower, std::size_t upper) {
  const std::size_t n = f.nvars();
  if (lower == upper) throw std::invalid_argument("integration bounds must be distinct variables");
  const MultiPoly xl = MultiPoly::variable(n, lower);
  const MultiPoly xu = MultiPoly::variable(n, upper);
  MultiPoly r(n);
  MultiPoly pu = xu, pl = xl;  // x^(d+1)
  for (std::size_t d = 0; d < f.coeffs().size(); ++d) {
    if (!f.coeffs()[d].is_zero())
      r += f.coeffs()[d] * (pu - pl) * make_rational(1, static_cast<long>(d + 1));
    pu *= xu;
    pl *= xl;
  }
  return r;
}

}  // namespace qi
