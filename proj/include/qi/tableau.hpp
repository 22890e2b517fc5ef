#pragma once

/// \file tableau.hpp
/// \brief Partitions, standard Young tableaux, and the group-algebra and
/// polynomial data attached to a tableau.
///
/// Cells are (row i, column j), 1-indexed, with row 1 the longest row.
/// Standard means entries increase along each row and from row i to row i+1
/// within each column (the longest row is drawn at the bottom, so this is
/// "increasing up the columns").

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qi/group_algebra.hpp"

namespace qi {

class Partition {
 public:
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  int row_length(std::size_t i) const { return parts_.at(i - 1); }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Height of column j (1-indexed).
  int column_height(int j) const {
    int h = 0;
    for (int p : parts_)
      if (p >= j) ++h;
    return h;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= parts_.front(); ++j) c.push_back(column_height(j));
    return Partition(std::move(c));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + "]";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order: [n], [n-1,1], ...
inline std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// sum over cells (i,j) of (j - i)
inline int content(const Partition& shape) {
  int c = 0;
  for (std::size_t i = 1; i <= shape.rows(); ++i)
    for (int j = 1; j <= shape.row_length(i); ++j) c += j - static_cast<int>(i);
  return c;
}

/// n! / prod of hook lengths
inline BigInt hook_length_count(const Partition& shape) {
  BigInt denom = 1;
  for (std::size_t i = 1; i <= shape.rows(); ++i)
    for (int j = 1; j <= shape.row_length(i); ++j) {
      const int arm = shape.row_length(i) - j;
      const int leg = shape.column_height(j) - static_cast<int>(i);
      denom *= arm + leg + 1;
    }
  return factorial(static_cast<unsigned>(shape.size())) / denom;
}

class Tableau {
 public:
  /// rows[0] is row 1. Entries must be a bijection onto 1..n and row lengths a partition.
  explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)), shape_(shape_of(rows_)) {
    const int n = shape_.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& r : rows_)
      for (int v : r) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
          throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
        seen[static_cast<std::size_t>(v)] = true;
      }
  }

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::size_t size() const { return static_cast<std::size_t>(shape_.size()); }
  std::size_t num_columns() const { return static_cast<std::size_t>(shape_.row_length(1)); }

  /// T(i,j)
  int at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_.size() || j < 1 || j > rows_[i - 1].size())
      throw std::out_of_range("cell (" + std::to_string(i) + "," + std::to_string(j) + ") not in diagram");
    return rows_[i - 1][j - 1];
  }

  bool has_cell(std::size_t i, std::size_t j) const {
    return i >= 1 && i <= rows_.size() && j >= 1 && j <= rows_[i - 1].size();
  }

  /// C_j, listed from row 1 upward.
  std::vector<int> column(std::size_t j) const {
    std::vector<int> c;
    for (const auto& r : rows_)
      if (r.size() >= j) c.push_back(r[j - 1]);
    return c;
  }

  const std::vector<int>& row(std::size_t i) const { return rows_.at(i - 1); }

  bool is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
        if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
      }
    return true;
  }

  /// Rows read from the shortest (top) row down to row 1, each left to right.
  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
  }

  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      s += i ? "|" : "";
      for (std::size_t j = 0; j < rows_[i].size(); ++j) s += (j ? "," : "") + std::to_string(rows_[i][j]);
    }
    return s + "}";
  }

 private:
  static Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
  }

  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

/// All standard tableaux of the shape, sorted lexicographically by their rows
/// read from row 1.
inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
  const int n = shape.size();
  std::vector<std::vector<int>> rows(shape.rows());
  std::vector<Tableau> out;
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t len = rows[i].size();
      if (static_cast<int>(len) >= shape.parts()[i]) continue;
      if (i > 0 && rows[i - 1].size() <= len) continue;
      rows[i].push_back(v);
      place(v + 1);
      rows[i].pop_back();
    }
  };
  place(1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Tableau> standard_tableaux_of_size(int n) {
  std::vector<Tableau> out;
  for (const auto& p : partitions_of(n)) {
    auto ts = standard_tableaux(p);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

/// Number of standard tableaux, by enumeration; checked against the hook-length formula.
inline std::size_t f_lambda(const Partition& shape) {
  const std::size_t count = standard_tableaux(shape).size();
  if (BigInt(static_cast<unsigned long>(count)) != hook_length_count(shape))
    throw std::logic_error("standard tableau count disagrees with hook-length formula for " + shape.to_string());
  return count;
}

/// Lascoux-Schutzenberger cocharge of the reading word: letter 1 gets index 0,
/// and k+1 gets index(k)+1 when it sits right of k, else index(k).
/// cocharge = C(n,2) - sum of indices.
inline int cocharge(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("cocharge needs a standard tableau: " + t.to_string());
  const std::vector<int> w = t.reading_word();
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(p)])] = p;
  int index = 0, charge = 0;
  for (int k = 1; k < n; ++k) {
    if (pos[static_cast<std::size_t>(k + 1)] > pos[static_cast<std::size_t>(k)]) ++index;
    charge += index;
  }
  return n * (n - 1) / 2 - charge;
}

/// The tableau of shape [n-1,1] whose second row holds j.
inline Tableau hook_tableau(int n, int j) {
  if (n < 2) throw std::invalid_argument("hook tableau needs n >= 2");
  if (j < 2 || j > n) throw std::invalid_argument("second-row entry must lie in 2..n");
  std::vector<int> first;
  for (int v = 1; v <= n; ++v)
    if (v != j) first.push_back(v);
  return Tableau({first, {j}});
}

/// P(T) = prod_i [R_i]
inline GroupAlgebraElem row_symmetrizer(const Tableau& t) {
  GroupAlgebraElem g = GroupAlgebraElem::identity(t.size());
  for (const auto& r : t.rows())
    if (r.size() > 1) g = g * bracket(t.size(), r, false);
  return g;
}

/// N(T) = prod_i [C_i]'
inline GroupAlgebraElem col_antisymmetrizer(const Tableau& t) {
  GroupAlgebraElem g = GroupAlgebraElem::identity(t.size());
  for (std::size_t j = 1; j <= t.num_columns(); ++j) {
    const auto c = t.column(j);
    if (c.size() > 1) g = g * bracket(t.size(), c, true);
  }
  return g;
}

/// Young's idempotent f_lambda N(T) P(T) / n!
inline GroupAlgebraElem gamma(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("gamma needs a standard tableau: " + t.to_string());
  const BigRational scale = make_rational(BigInt(static_cast<unsigned long>(f_lambda(t.shape()))),
                                          factorial(static_cast<unsigned>(t.size())));
  return col_antisymmetrizer(t) * row_symmetrizer(t) * scale;
}

/// Same-column factors of V_T: within column c, rows a < b give (x_{T(b,c)} - x_{T(a,c)}).
inline std::vector<BinomialFactor> v_t_factors(const Tableau& t, unsigned power = 1) {
  std::vector<BinomialFactor> f;
  for (std::size_t j = 1; j <= t.num_columns(); ++j) {
    const auto c = t.column(j);
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        f.push_back({static_cast<std::size_t>(c[b]), static_cast<std::size_t>(c[a]), power});
  }
  return f;
}

/// V_T = prod over same-column pairs; for the hook with second-row entry j this is x_j - x_1.
inline MultiPoly v_t(const Tableau& t) {
  MultiPoly v = MultiPoly::one(t.size());
  for (const auto& f : v_t_factors(t)) v *= binomial_difference(t.size(), f.a, f.b);
  return v;
}

namespace detail {
inline void check_column_cell(const Tableau& t, std::size_t col, std::size_t k, std::size_t j) {
  if (col < 1 || col >= j || j > t.num_columns())
    throw std::invalid_argument("column " + std::to_string(j) + " must lie strictly right of column " +
                                std::to_string(col));
  if (!t.has_cell(k, j))
    throw std::invalid_argument("cell (" + std::to_string(k) + "," + std::to_string(j) + ") not in diagram");
}
}  // namespace detail

/// Sum of the transpositions (c, T(k,j)) over c in column col; needs col < j.
inline GroupAlgebraElem alpha(const Tableau& t, std::size_t col, std::size_t k, std::size_t j) {
  detail::check_column_cell(t, col, k, j);
  GroupAlgebraElem g(t.size());
  for (int c : t.column(col)) g.add_term(Perm::transposition(t.size(), c, t.at(k, j)), 1);
  return g;
}

/// [C_col ∪ {T(k,j)}]'
inline GroupAlgebraElem col_union_antisym(const Tableau& t, std::size_t col, std::size_t k, std::size_t j) {
  detail::check_column_cell(t, col, k, j);
  std::vector<int> u = t.column(col);
  u.push_back(t.at(k, j));
  return bracket(t.size(), u, true);
}

}  // namespace qi
