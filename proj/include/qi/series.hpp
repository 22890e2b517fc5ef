#pragma once

/// \file series.hpp
/// \brief Truncated power series in q with integer coefficients.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qi/rational.hpp"

namespace qi {

class PowerSeriesQ {
 public:
  /// Zero series known through q^truncation.
  explicit PowerSeriesQ(std::size_t truncation) : coeffs_(truncation + 1, 0) {}

  PowerSeriesQ(std::size_t truncation, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(truncation + 1, 0);
  }

  /// sum_e q^e over a multiset of exponents; exponents beyond the truncation are dropped.
  static PowerSeriesQ from_exponents(std::size_t truncation, std::span<const unsigned> exps) {
    PowerSeriesQ s(truncation);
    for (unsigned e : exps)
      if (e <= truncation) s.coeffs_[e] += 1;
    return s;
  }

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t d) const { return coeffs_.at(d); }
  BigInt& operator[](std::size_t d) { return coeffs_.at(d); }

  PowerSeriesQ& operator+=(const PowerSeriesQ& o) {
    check_same(o);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
  }

  friend PowerSeriesQ operator+(PowerSeriesQ a, const PowerSeriesQ& b) { return a += b; }

  friend PowerSeriesQ operator*(const PowerSeriesQ& a, const PowerSeriesQ& b) {
    a.check_same(b);
    PowerSeriesQ r(a.truncation());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend bool operator==(const PowerSeriesQ& a, const PowerSeriesQ& b) = default;

  std::string to_text() const {
    std::string s;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
      if (coeffs_[d] == 0) continue;
      if (!s.empty()) s += coeffs_[d] < 0 ? " - " : " + ";
      else if (coeffs_[d] < 0) s += "-";
      BigInt mag = abs(coeffs_[d]);
      if (mag != 1 || d == 0) s += mag.get_str() + (d == 0 ? "" : "*");
      if (d == 1) s += "q";
      else if (d > 1) s += "q^" + std::to_string(d);
    }
    return (s.empty() ? "0" : s) + " + O(q^" + std::to_string(coeffs_.size()) + ")";
  }

 private:
  void check_same(const PowerSeriesQ& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw DimensionError("series truncation mismatch");
  }

  std::vector<BigInt> coeffs_;
};

/// numerator / prod_{i in factors} (1 - q^i), truncated at D. Each factor is an
/// exact prefix recurrence c[d] += c[d - i].
inline PowerSeriesQ series_divide(const PowerSeriesQ& numerator, std::span<const unsigned> factors,
                                  std::size_t truncation) {
  std::vector<BigInt> c(truncation + 1, 0);
  for (std::size_t d = 0; d <= truncation && d <= numerator.truncation(); ++d) c[d] = numerator[d];
  for (unsigned i : factors) {
    if (i == 0) throw std::invalid_argument("factor (1 - q^0) is zero");
    for (std::size_t d = i; d <= truncation; ++d) c[d] += c[d - i];
  }
  return PowerSeriesQ(truncation, std::move(c));
}

/// numerator / ((1-q)(1-q^2)...(1-q^n)) through q^D.
inline PowerSeriesQ series_expand(const PowerSeriesQ& numerator, unsigned n, std::size_t truncation) {
  std::vector<unsigned> f(n);
  for (unsigned i = 0; i < n; ++i) f[i] = i + 1;
  return series_divide(numerator, f, truncation);
}

}  // namespace qi
