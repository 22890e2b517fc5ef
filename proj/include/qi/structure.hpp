#pragma once

/// \file structure.hpp
/// \brief Hilbert series of QI_m from content and cocharge, comparison with the
/// brute-force oracle, and the Delta^2 containment / change-of-basis checks.

#include <optional>
#include <string>
#include <vector>

#include "qi/calogero.hpp"
#include "qi/series.hpp"

namespace qi {

inline constexpr std::size_t kMaxHilbertN = 6;
inline constexpr std::size_t kMaxTruncation = 400;

inline unsigned choose2(std::size_t n) { return static_cast<unsigned>(n * (n - 1) / 2); }

/// m(C(n,2) - content(shape)) + cocharge(T)
inline unsigned numerator_exponent(const Tableau& t, unsigned m) {
  const int gap = static_cast<int>(choose2(t.size())) - content(t.shape());
  return m * static_cast<unsigned>(gap) + static_cast<unsigned>(cocharge(t));
}

struct ShapeSeries {
  Partition shape;
  std::size_t f = 0;
  std::vector<Tableau> tableaux;
  std::vector<unsigned> exponents;  // one per standard tableau, same order
  PowerSeriesQ per_tableau;         // (sum_T q^e(T)) / prod (1 - q^i): one gamma_T summand
  PowerSeriesQ isotypic;            // f * per_tableau
};

struct HilbertReport {
  std::size_t n = 0;
  unsigned m = 0;
  std::size_t truncation = 0;
  std::vector<ShapeSeries> shapes;
  PowerSeriesQ numerator{0};
  PowerSeriesQ total{0};
  std::optional<std::vector<std::size_t>> oracle;  // raw dim (QI_m)_d, d = 0..truncation

  bool oracle_agrees() const {
    if (!oracle) return false;
    for (std::size_t d = 0; d < oracle->size(); ++d)
      if (total[d] != static_cast<unsigned long>((*oracle)[d])) return false;
    return true;
  }
};

inline HilbertReport full_hilbert(std::size_t n, unsigned m, std::size_t truncation) {
  if (n < 1) throw std::invalid_argument("hilbert needs n >= 1");
  if (n > kMaxHilbertN)
    throw ResourceError("hilbert series limited to n <= " + std::to_string(kMaxHilbertN) + " (got " +
                        std::to_string(n) + ")");
  if (truncation > kMaxTruncation)
    throw ResourceError("truncation limited to D <= " + std::to_string(kMaxTruncation));
  HilbertReport r;
  r.n = n;
  r.m = m;
  r.truncation = truncation;
  r.numerator = PowerSeriesQ(truncation);
  const auto nn = static_cast<unsigned>(n);
  for (const auto& shape : partitions_of(static_cast<int>(n))) {
    ShapeSeries s{shape, f_lambda(shape), standard_tableaux(shape), {}, PowerSeriesQ(0), PowerSeriesQ(0)};
    for (const auto& t : s.tableaux) s.exponents.push_back(numerator_exponent(t, m));
    const PowerSeriesQ num = PowerSeriesQ::from_exponents(truncation, s.exponents);
    s.per_tableau = series_expand(num, nn, truncation);
    s.isotypic = PowerSeriesQ(truncation);
    for (std::size_t c = 0; c < s.f; ++c) {
      s.isotypic += s.per_tableau;
      r.numerator += num;
    }
    r.shapes.push_back(std::move(s));
  }
  r.total = series_expand(r.numerator, nn, truncation);
  for (const auto& c : r.total.coeffs())
    if (c < 0) throw TheoremViolation("negative Hilbert series coefficient");
  return r;
}

inline void attach_oracle(HilbertReport& r) {
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d <= r.truncation; ++d)
    dims.push_back(graded_dimension_oracle(r.n, r.m, static_cast<unsigned>(d)).dimension());
  r.oracle = std::move(dims);
}

/// sum_{k=0}^{n-2} q^{mn+1+k}: the quotient series of one hook summand gamma_T QI_m.
inline PowerSeriesQ hook_component_series(std::size_t n, unsigned m) {
  if (n < 2) throw std::invalid_argument("hook shape needs n >= 2");
  const unsigned lo = m * static_cast<unsigned>(n) + 1;
  std::vector<unsigned> e;
  for (unsigned k = 0; k + 2 <= n; ++k) e.push_back(lo + k);
  return PowerSeriesQ::from_exponents(lo + static_cast<unsigned>(n) - 2, e);
}

// ---------------------------------------------------------------------------
// Oracle comparisons at the level of shapes and single summands.

struct DegreeMismatch {
  std::string what;
  std::size_t degree;
  std::string expected;
  std::string actual;
};

struct IsotypicComparison {
  std::size_t n = 0;
  unsigned m = 0;
  std::size_t truncation = 0;
  std::size_t comparisons = 0;
  std::vector<DegreeMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// For every degree d <= D: the total oracle dimension, each shape's isotypic
/// dimension (sum over its tableaux of dim gamma_T (QI_m)_d) and each single
/// summand dim gamma_T (QI_m)_d against the series from content and cocharge.
inline IsotypicComparison compare_isotypic(std::size_t n, unsigned m, std::size_t truncation) {
  const HilbertReport h = full_hilbert(n, m, truncation);
  IsotypicComparison c;
  c.n = n;
  c.m = m;
  c.truncation = truncation;
  for (std::size_t d = 0; d <= truncation; ++d) {
    const QIWitness w = graded_dimension_oracle(n, m, static_cast<unsigned>(d));
    ++c.comparisons;
    if (h.total[d] != static_cast<unsigned long>(w.dimension()))
      c.mismatches.push_back({"total", d, h.total[d].get_str(), std::to_string(w.dimension())});
    for (const auto& s : h.shapes) {
      std::size_t shape_sum = 0;
      for (const auto& t : s.tableaux) {
        const std::size_t dim = isotypic_dimension(w, t);
        shape_sum += dim;
        ++c.comparisons;
        if (s.per_tableau[d] != static_cast<unsigned long>(dim))
          c.mismatches.push_back({"summand " + t.to_string(), d, s.per_tableau[d].get_str(), std::to_string(dim)});
      }
      ++c.comparisons;
      if (s.isotypic[d] != static_cast<unsigned long>(shape_sum))
        c.mismatches.push_back({"shape " + s.shape.to_string(), d, s.isotypic[d].get_str(), std::to_string(shape_sum)});
    }
  }
  return c;
}

/// Per hook tableau, the dimension of gamma_T (QI_m)_d modulo the ideal
/// (e_1..e_n) against hook_component_series, for d = 0..mn+n-1.
inline IsotypicComparison compare_hook_quotients(std::size_t n, unsigned m) {
  const PowerSeriesQ expected = hook_component_series(n, m);
  IsotypicComparison c;
  c.n = n;
  c.m = m;
  c.truncation = expected.truncation();
  for (std::size_t j = 2; j <= n; ++j) {
    const Tableau t = hook_tableau(static_cast<int>(n), static_cast<int>(j));
    for (std::size_t d = 0; d <= expected.truncation(); ++d) {
      const QuotientDimension q = quotient_isotypic_dimension(n, m, static_cast<unsigned>(d), t);
      ++c.comparisons;
      if (expected[d] != static_cast<unsigned long>(q.quotient()))
        c.mismatches.push_back({"hook quotient " + t.to_string(), d, expected[d].get_str(),
                                std::to_string(q.quotient())});
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Change of basis between QI_{m+1} and QI_m.

struct DetDegree {
  std::size_t n = 0;
  BigInt from_exponents;  // sum_T f (e_{m+1}(T) - e_m(T)), at m = 0
  BigInt from_content;    // sum_lambda f^2 (C(n,2) - content)
  BigInt closed_form;     // C(n,2) n!
  BigInt sum_f_squared;   // must be n!
  bool pass() const {
    return from_exponents == from_content && from_content == closed_form && sum_f_squared == factorial(static_cast<unsigned>(n));
  }
};

inline DetDegree det_degree(std::size_t n) {
  if (n < 1) throw std::invalid_argument("det_degree needs n >= 1");
  if (n > kMaxHilbertN) throw ResourceError("det_degree limited to n <= " + std::to_string(kMaxHilbertN));
  DetDegree r;
  r.n = n;
  for (const auto& shape : partitions_of(static_cast<int>(n))) {
    const std::size_t f = f_lambda(shape);
    const BigInt fz(static_cast<unsigned long>(f));
    r.sum_f_squared += fz * fz;
    r.from_content += fz * fz * (static_cast<long>(choose2(n)) - content(shape));
    for (const auto& t : standard_tableaux(shape))
      r.from_exponents += fz * (BigInt(numerator_exponent(t, 1)) - BigInt(numerator_exponent(t, 0)));
  }
  r.closed_form = BigInt(choose2(n)) * factorial(static_cast<unsigned>(n));
  return r;
}

struct ChangeOfBasisN2 {
  unsigned m = 0;
  MultiPoly entries[2][2] = {{MultiPoly(2), MultiPoly(2)}, {MultiPoly(2), MultiPoly(2)}};
  MultiPoly det{2};
  std::optional<BigRational> scalar;  // det / Delta_2^2 when that is a constant
};

/// Expands {1, (x1-x2)^{2m+3}} (a Lambda_2-basis of QI_{m+1}) in the basis
/// {1, (x1-x2)^{2m+1}} of QI_m: each P splits as A + B (x1-x2)^{2m+1} with
/// A = (P + (12)P)/2 and B = ((P - (12)P)/2) / (x1-x2)^{2m+1}, both symmetric.
inline ChangeOfBasisN2 change_of_basis_n2(unsigned m) {
  ChangeOfBasisN2 r;
  r.m = m;
  const Perm swap = Perm::transposition(2, 1, 2);
  const MultiPoly d = binomial_difference(2, 1, 2);
  const MultiPoly targets[2] = {MultiPoly::one(2), d.pow(2 * m + 3)};
  const BigRational half = make_rational(1, 2);
  for (int row = 0; row < 2; ++row) {
    const MultiPoly& p = targets[row];
    const MultiPoly sym = (p + act(swap, p)) * half;
    const auto anti = divide_by_binomial_power((p - act(swap, p)) * half, 1, 2, 2 * m + 1);
    if (!anti) throw TheoremViolation("antisymmetric part not divisible by (x1-x2)^(2m+1)");
    if (act(swap, *anti) != *anti || act(swap, sym) != sym)
      throw TheoremViolation("change-of-basis entries are not symmetric");
    r.entries[row][0] = sym;
    r.entries[row][1] = *anti;
  }
  r.det = r.entries[0][0] * r.entries[1][1] - r.entries[0][1] * r.entries[1][0];
  const auto q = divide_exact(r.det, vandermonde(2).pow(2));
  if (q && q->is_constant() && !q->is_zero()) r.scalar = q->coefficient({0, 0});
  return r;
}

// ---------------------------------------------------------------------------
// Delta^2 QI_m ⊂ QI_{m+1} ⊂ QI_m.

struct ChainReport {
  std::size_t n = 0;
  unsigned m = 0;
  unsigned max_degree = 0;
  std::size_t embedded = 0;  // Delta^2 p checked (m+1)-quasiinvariant
  std::size_t descended = 0; // (m+1)-witness elements checked m-quasiinvariant
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Every oracle witness element of QI_m (degree <= max_degree) and every hook
/// basis element is pushed through Delta^2; every witness element of QI_{m+1}
/// is checked to lie in QI_m.
inline ChainReport delta_sq_chain_check(std::size_t n, unsigned m, unsigned max_degree) {
  ChainReport r;
  r.n = n;
  r.m = m;
  r.max_degree = max_degree;
  auto embed = [&](const MultiPoly& p) {
    ++r.embedded;
    try {
      delta_sq_embed(p, m);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string(e.what()) + ": " + to_text(p));
    }
  };
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const auto& p : graded_dimension_oracle(n, m, d).basis) embed(p);
    for (const auto& p : graded_dimension_oracle(n, m + 1, d).basis) {
      ++r.descended;
      if (!is_quasiinvariant(p, m)) r.failures.push_back("QI_{m+1} element not in QI_m: " + to_text(p));
    }
  }
  if (n >= 2)
    for (std::size_t j = 2; j <= n; ++j)
      for (const auto& q : hook_basis(n, m, j)) embed(q);
  return r;
}

}  // namespace qi
