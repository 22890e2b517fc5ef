#pragma once

/// \file linalg.hpp
/// \brief Exact linear algebra: fraction-free (Bareiss) echelon form over Z,
/// nullspaces, and ranks of sets of polynomials.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "qi/multipoly.hpp"

namespace qi {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatVector = std::vector<BigRational>;

struct Echelon {
  IntMatrix rows;                  // first `pivots.size()` rows are the nonzero echelon rows
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free Gaussian elimination. Each update
///   a[i][c] = (p * a[i][c] - a[i][col] * a[r][c]) / prev
/// divides exactly (Sylvester's identity); a non-exact division throws.
inline Echelon bareiss_echelon(IntMatrix a, std::size_t ncols) {
  Echelon out;
  const std::size_t nrows = a.size();
  for (const auto& row : a)
    if (row.size() != ncols) throw DimensionError("ragged matrix");
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t piv = r;
    while (piv < nrows && a[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(a[piv], a[r]);
    const BigInt p = a[r][col];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const BigInt f = a[i][col];
      for (std::size_t c = col; c < ncols; ++c) {
        BigInt v = p * a[i][c] - f * a[r][c];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("Bareiss step produced a non-exact division");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][c] = std::move(v);
      }
    }
    prev = p;
    out.pivots.push_back(col);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

/// Clears denominators row by row.
inline IntMatrix to_integer_rows(const std::vector<RatVector>& rows) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> ir;
    ir.reserve(row.size());
    for (const auto& v : row) ir.push_back(BigInt(v.get_num() * (l / v.get_den())));
    m.push_back(std::move(ir));
  }
  return m;
}

/// Basis of {x : A x = 0}; each vector is scaled to a primitive integer vector.
inline std::vector<RatVector> nullspace(const IntMatrix& a, std::size_t ncols) {
  const Echelon e = bareiss_echelon(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVector x(ncols, 0);
    x[free] = 1;
    for (std::size_t r = e.rank(); r-- > 0;) {
      const std::size_t pc = e.pivots[r];
      BigRational s = 0;
      for (std::size_t c = pc + 1; c < ncols; ++c)
        if (x[c] != 0 && e.rows[r][c] != 0) s += BigRational(e.rows[r][c]) * x[c];
      x[pc] = -s / BigRational(e.rows[r][pc]);
    }
    // primitive integer scaling
    auto ints = to_integer_rows({x});
    BigInt g = 0;
    for (const auto& v : ints[0]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    RatVector scaled;
    scaled.reserve(ncols);
    for (const auto& v : ints[0]) scaled.emplace_back(BigInt(v / g));
    basis.push_back(std::move(scaled));
  }
  return basis;
}

/// Plain Gauss-Jordan over Q. Kept as an independent cross-check of the
/// fraction-free path.
inline std::size_t rational_rank(std::vector<RatVector> a) {
  if (a.empty()) return 0;
  const std::size_t ncols = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const BigRational p = a[r][col];
    for (auto& v : a[r]) v /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      const BigRational f = a[i][col];
      for (std::size_t c = col; c < ncols; ++c) a[i][c] -= f * a[r][c];
    }
    ++r;
  }
  return r;
}

/// Coefficient matrix of a list of polynomials (one row each) over the union
/// of their monomials, columns in graded-lex descending order.
struct PolyMatrix {
  std::vector<Exponent> columns;
  std::vector<RatVector> rows;
};

inline PolyMatrix coefficient_matrix(std::span<const MultiPoly> polys) {
  std::map<Exponent, std::size_t, GrlexGreater> index;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
  PolyMatrix m;
  for (auto& [e, i] : index) {
    i = m.columns.size();
    m.columns.push_back(e);
  }
  for (const auto& p : polys) {
    RatVector row(m.columns.size(), 0);
    for (const auto& [e, c] : p.terms()) row[index.at(e)] = c;
    m.rows.push_back(std::move(row));
  }
  return m;
}

/// dim_Q span(polys)
inline std::size_t poly_rank(std::span<const MultiPoly> polys) {
  if (polys.empty()) return 0;
  const PolyMatrix m = coefficient_matrix(polys);
  return bareiss_echelon(to_integer_rows(m.rows), m.columns.size()).rank();
}

/// A basis of span(polys): the nonzero echelon rows, as polynomials.
inline std::vector<MultiPoly> span_basis(std::span<const MultiPoly> polys) {
  std::vector<MultiPoly> out;
  if (polys.empty()) return out;
  const std::size_t n = polys.front().nvars();
  const PolyMatrix m = coefficient_matrix(polys);
  const Echelon e = bareiss_echelon(to_integer_rows(m.rows), m.columns.size());
  for (const auto& row : e.rows) {
    BigInt g = 0;
    for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    MultiPoly p(n);
    for (std::size_t c = 0; c < row.size(); ++c) p.add_term(m.columns[c], BigRational(BigInt(row[c] / g)));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qi
