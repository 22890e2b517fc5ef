#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qi;
using qt::x;

TEST(Tableaux, Counts) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(standard_tableaux(Partition({n})).size(), 1u);
    if (n >= 2) {
      const auto hooks = standard_tableaux(Partition({n - 1, 1}));
      EXPECT_EQ(hooks.size(), static_cast<std::size_t>(n - 1));
      for (int j = 2; j <= n; ++j)
        EXPECT_NE(std::find(hooks.begin(), hooks.end(), hook_tableau(n, j)), hooks.end());
    }
    std::size_t sum_sq = 0;
    for (const auto& p : partitions_of(n)) sum_sq += f_lambda(p) * f_lambda(p);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(sum_sq)), factorial(static_cast<unsigned>(n)));
  }
  EXPECT_EQ(f_lambda(Partition({2, 1})), 2u);
  EXPECT_EQ(f_lambda(Partition({1, 1, 1})), 1u);
  EXPECT_EQ(f_lambda(Partition({2, 2})), 2u);
  EXPECT_EQ(f_lambda(Partition({3, 2, 1})), 16u);
  EXPECT_EQ(partitions_of(6).size(), 11u);
}

TEST(Tableaux, Content) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(content(Partition({n})), n * (n - 1) / 2);
  EXPECT_EQ(content(Partition({1, 1, 1})), -3);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(content(Partition({n - 1, 1})), (n - 1) * (n - 2) / 2 - 1);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(content(p.conjugate()), -content(p));
}

TEST(Tableaux, Cocharge) {
  EXPECT_EQ(cocharge(Tableau({{1, 2, 3, 4}})), 0);
  EXPECT_EQ(cocharge(Tableau({{1}, {2}, {3}})), 3);
  for (int n = 2; n <= 6; ++n)
    for (int j = 2; j <= n; ++j) EXPECT_EQ(cocharge(hook_tableau(n, j)), n - j + 1);
  EXPECT_THROW(cocharge(Tableau({{2, 1}})), std::invalid_argument);
  // m = 0: sum over tableaux of f q^cocharge is the graded regular representation,
  // i.e. prod_{i<=n} [i]_q; check the total multiset size and top degree
  for (int n = 1; n <= 6; ++n) {
    int top = 0;
    for (const auto& t : standard_tableaux_of_size(n)) top = std::max(top, cocharge(t));
    EXPECT_EQ(top, n * (n - 1) / 2);
  }
}

TEST(Tableaux, ValidationAndRendering) {
  EXPECT_THROW(Tableau({{1, 3}, {3}}), std::invalid_argument);
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_FALSE(Tableau({{2, 1}}).is_standard());
  EXPECT_EQ(Tableau({{1, 3}, {2}}).to_string(), "{1,3|2}");
  EXPECT_THROW(gamma(Tableau({{2, 1}})), std::invalid_argument);
}

TEST(Tableaux, SymmetrizersAndVt) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : standard_tableaux_of_size(n)) {
      const GroupAlgebraElem g = gamma(t);
      EXPECT_EQ(g * g, g) << t.to_string();
    }
  EXPECT_EQ(v_t(hook_tableau(3, 2)), x(3, 2) - x(3, 1));
  EXPECT_EQ(v_t(Tableau({{1, 2, 3}})), MultiPoly::one(3));
  const MultiPoly col = v_t(Tableau({{1}, {2}, {3}}));
  EXPECT_TRUE(col == vandermonde(3) || col == -vandermonde(3));
  // gamma kills symmetric functions for non-row shapes
  for (int j = 2; j <= 4; ++j) EXPECT_TRUE(apply(gamma(hook_tableau(4, j)), elementary_symmetric(4, 1)).is_zero());
}

TEST(Tableaux, ColumnAntisymmetrizersKillRowSymmetrizer) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : standard_tableaux_of_size(n)) {
      const GroupAlgebraElem p = row_symmetrizer(t), g = gamma(t);
      for (std::size_t i = 1; i <= t.num_columns(); ++i)
        for (std::size_t j = i + 1; j <= t.num_columns(); ++j)
          for (std::size_t k = 1; t.has_cell(k, j); ++k) {
            EXPECT_TRUE((col_union_antisym(t, i, k, j) * p).is_zero());
            EXPECT_EQ(alpha(t, i, k, j) * g, g);
          }
    }
  const Tableau t({{1, 2}, {3}});
  EXPECT_THROW(alpha(t, 2, 1, 1), std::invalid_argument);
  EXPECT_THROW(alpha(t, 1, 2, 2), std::invalid_argument);
}
