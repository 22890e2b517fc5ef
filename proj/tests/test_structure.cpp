#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qi;
using qt::x;

namespace {

/// Series from an exponent multiset, expanded by partition counting.
BigInt series_by_counting(const std::vector<unsigned>& exps, unsigned n, unsigned d) {
  BigInt s = 0;
  for (unsigned e : exps)
    if (e <= d) s += qt::partitions_bounded(d - e, n);
  return s;
}

std::vector<long> coeffs(const PowerSeriesQ& s) {
  std::vector<long> v;
  for (const auto& c : s.coeffs()) v.push_back(c.get_si());
  return v;
}

}  // namespace

TEST(Structure, NumeratorValues) {
  EXPECT_EQ(coeffs(full_hilbert(2, 1, 4).numerator), (std::vector<long>{1, 0, 0, 1, 0}));
  EXPECT_EQ(coeffs(full_hilbert(3, 1, 9).numerator), (std::vector<long>{1, 0, 0, 0, 2, 2, 0, 0, 0, 1}));
  EXPECT_EQ(coeffs(full_hilbert(2, 0, 5).total), (std::vector<long>{1, 2, 3, 4, 5, 6}));
  // m = 0: all of R
  for (unsigned n = 1; n <= 5; ++n) {
    const auto h = full_hilbert(n, 0, 8);
    for (unsigned d = 0; d <= 8; ++d) EXPECT_EQ(h.total[d], binomial(d + n - 1, n - 1));
  }
}

TEST(Structure, SeriesAgreesWithCounting) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned m = 0; m <= 2; ++m) {
      const auto h = full_hilbert(n, m, 15);
      std::vector<unsigned> all;
      for (const auto& s : h.shapes) {
        EXPECT_EQ(s.exponents.size(), s.f);
        for (std::size_t c = 0; c < s.f; ++c) all.insert(all.end(), s.exponents.begin(), s.exponents.end());
      }
      for (unsigned d = 0; d <= 15; ++d) EXPECT_EQ(h.total[d], series_by_counting(all, n, d));
    }
  EXPECT_THROW(full_hilbert(7, 1, 5), ResourceError);
}

TEST(Structure, HookSeries) {
  EXPECT_EQ(coeffs(hook_component_series(3, 1)), (std::vector<long>{0, 0, 0, 0, 1, 1}));
  for (unsigned m = 0; m <= 3; ++m) {
    const auto s = hook_component_series(2, m);
    EXPECT_EQ(s.truncation(), 2 * m + 1);
    EXPECT_EQ(s[2 * m + 1], 1);
  }
  // the hook shape's exponent multiset is mn+1 .. mn+n-1
  for (int n = 2; n <= 6; ++n)
    for (unsigned m = 0; m <= 3; ++m) {
      const auto h = full_hilbert(static_cast<std::size_t>(n), m, 1);
      for (const auto& s : h.shapes) {
        if (!(s.shape.rows() == 2 && s.shape.row_length(2) == 1)) continue;
        auto e = s.exponents;
        std::sort(e.begin(), e.end());
        for (int k = 0; k < n - 1; ++k) EXPECT_EQ(e[static_cast<std::size_t>(k)], m * static_cast<unsigned>(n) + 1 + static_cast<unsigned>(k));
      }
    }
}

TEST(Structure, OracleAgreement) {
  for (unsigned m = 0; m <= 3; ++m) {
    auto h = full_hilbert(2, m, 12);
    attach_oracle(h);
    EXPECT_TRUE(h.oracle_agrees()) << m;
  }
  for (unsigned m = 0; m <= 2; ++m) {
    const auto c = compare_isotypic(3, m, 10);
    EXPECT_TRUE(c.pass()) << m << (c.mismatches.empty() ? "" : " " + c.mismatches.front().what);
  }
}

TEST(Structure, HookQuotients) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (unsigned m = 0; m <= 2; ++m) EXPECT_TRUE(compare_hook_quotients(n, m).pass()) << n << " " << m;
}

TEST(Structure, DetDegree) {
  EXPECT_EQ(det_degree(2).closed_form, 2);
  EXPECT_EQ(det_degree(3).closed_form, 18);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(det_degree(n).pass()) << n;
}

TEST(Structure, ChangeOfBasisN2) {
  const MultiPoly d2 = elementary_symmetric(2, 1).pow(2) - elementary_symmetric(2, 2) * BigRational(4);
  for (unsigned m = 0; m <= 4; ++m) {
    const auto cb = change_of_basis_n2(m);
    EXPECT_EQ(cb.det, vandermonde(2).pow(2));
    EXPECT_EQ(cb.det, d2);
    ASSERT_TRUE(cb.scalar);
    EXPECT_EQ(*cb.scalar, 1);
    EXPECT_EQ(cb.entries[0][0], MultiPoly::one(2));
    EXPECT_TRUE(cb.entries[0][1].is_zero());
    EXPECT_TRUE(cb.entries[1][0].is_zero());
    EXPECT_EQ(cb.entries[1][1], d2);
    // both bases are free: the oracle matches (1 + q^{2m+1}) / ((1-q)(1-q^2)) through 2m+4
    EXPECT_TRUE(is_quasiinvariant(vandermonde(2).pow(2 * m + 1), m));
    auto h = full_hilbert(2, m, 2 * m + 4);
    attach_oracle(h);
    EXPECT_TRUE(h.oracle_agrees());
  }
}

TEST(Structure, Chain) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (unsigned m = 0; m <= 2; ++m) {
      const auto r = delta_sq_chain_check(n, m, 6);
      EXPECT_TRUE(r.pass()) << n << " " << m;
      EXPECT_GT(r.embedded, 0u);
    }
}
