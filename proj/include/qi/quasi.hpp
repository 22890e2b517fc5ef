#pragma once

/// \file quasi.hpp
/// \brief m-quasiinvariance: the divisibility predicate, membership in the
/// per-tableau summands gamma_T R ∩ V_T^{2m+1} R, and a brute-force oracle for
/// the graded pieces of QI_m by exact linear algebra.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "qi/linalg.hpp"
#include "qi/tableau.hpp"

namespace qi {

inline constexpr std::size_t kMaxOracleVars = 4;
inline constexpr unsigned kDefaultOracleDegreeCap = 14;

/// Oracle degree cap; the QI_MAX_DEGREE environment variable overrides the default.
inline unsigned oracle_degree_cap() {
  if (const char* env = std::getenv("QI_MAX_DEGREE")) {
    try {
      const long v = std::stol(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("QI_MAX_DEGREE is not a non-negative integer: ") + env);
  }
  return kDefaultOracleDegreeCap;
}

/// (x_i - x_j)^{2m+1} | (1 - (i,j)) P for every i < j.
inline bool is_quasiinvariant(const MultiPoly& p, unsigned m) {
  const std::size_t n = p.nvars();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const MultiPoly diff = p - act(Perm::transposition(n, static_cast<int>(i), static_cast<int>(j)), p);
      if (diff.is_zero()) continue;
      if (*binomial_valuation(diff, i, j) < 2 * m + 1) return false;
    }
  return true;
}

inline bool divisible_by_v_t_power(const MultiPoly& p, const Tableau& t, unsigned m) {
  return divide_by_binomial_product(p, v_t_factors(t, 2 * m + 1)).has_value();
}

/// gamma_T p = p and V_T^{2m+1} | p.
inline bool in_gamma_component(const MultiPoly& p, const Tableau& t, unsigned m) {
  if (p.nvars() != t.size()) throw DimensionError("polynomial and tableau sizes differ");
  return apply(gamma(t), p) == p && divisible_by_v_t_power(p, t, m);
}

/// Degree-d homogeneous piece of QI_m.
struct QIWitness {
  std::size_t n = 0;
  unsigned m = 0;
  unsigned degree = 0;
  std::vector<MultiPoly> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Exponent vectors of all degree-d monomials in n variables, graded-lex descending.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == n) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace detail {

inline void check_oracle_guardrails(std::size_t n, unsigned d) {
  if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
  if (n > kMaxOracleVars)
    throw ResourceError("oracle limited to n <= " + std::to_string(kMaxOracleVars) + " (got " +
                        std::to_string(n) + ")");
  const unsigned cap = oracle_degree_cap();
  if (d > cap)
    throw ResourceError("oracle degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap) +
                        " (raise QI_MAX_DEGREE to override)");
}

/// Constraint matrix on the coefficients of a generic degree-d polynomial.
/// Substituting x_i = x_j + u into (1-(i,j)) x^a gives, at u^s,
///   (C(a_i,s) - C(a_j,s)) x_j^{a_i+a_j-s} * (other variables of a),
/// and every such coefficient with s <= 2m must cancel across monomials.
inline IntMatrix quasiinvariance_constraints(std::size_t n, unsigned m, const std::vector<Exponent>& monos) {
  using RowKey = std::tuple<std::size_t, std::size_t, unsigned, Exponent>;
  std::map<RowKey, std::size_t> row_index;
  IntMatrix rows;
  for (std::size_t col = 0; col < monos.size(); ++col) {
    const Exponent& a = monos[col];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (unsigned s = 1; s <= 2 * m; ++s) {
          const BigInt c = binomial(a[i], s) - binomial(a[j], s);
          if (c == 0) continue;
          Exponent reduced = a;
          reduced[i] = 0;
          reduced[j] = a[i] + a[j] - s;
          auto [it, inserted] = row_index.try_emplace(RowKey{i, j, s, std::move(reduced)}, rows.size());
          if (inserted) rows.emplace_back(monos.size(), BigInt(0));
          rows[it->second][col] += c;
        }
  }
  return rows;
}

}  // namespace detail

/// Basis of the degree-d piece of QI_m from the nullspace of the
/// quasiinvariance constraints (fraction-free elimination). With
/// `cross_check`, the rank is recomputed by plain rational elimination and a
/// disagreement throws.
inline QIWitness graded_dimension_oracle(std::size_t n, unsigned m, unsigned d, bool cross_check = false) {
  detail::check_oracle_guardrails(n, d);
  const auto monos = monomials_of_degree(n, d);
  const IntMatrix constraints = detail::quasiinvariance_constraints(n, m, monos);
  const auto null = nullspace(constraints, monos.size());
  if (cross_check) {
    std::vector<RatVector> rat;
    for (const auto& row : constraints) rat.emplace_back(row.begin(), row.end());
    if (monos.size() - rational_rank(rat) != null.size())
      throw std::logic_error("fraction-free and rational elimination disagree on nullity");
  }
  QIWitness w{n, m, d, {}};
  for (const auto& v : null) {
    MultiPoly p(n);
    for (std::size_t c = 0; c < monos.size(); ++c) p.add_term(monos[c], v[c]);
    w.basis.push_back(std::move(p));
  }
  return w;
}

inline std::vector<MultiPoly> gamma_images(const std::vector<MultiPoly>& polys, const Tableau& t) {
  const GroupAlgebraElem g = gamma(t);
  std::vector<MultiPoly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(apply(g, p));
  return out;
}

/// dim gamma_T W for W the witness space.
inline std::size_t isotypic_dimension(const QIWitness& w, const Tableau& t) {
  if (w.n != t.size()) throw DimensionError("witness and tableau sizes differ");
  return poly_rank(gamma_images(w.basis, t));
}

/// dim of the degree-d piece of gamma_T QI_m, of its part inside the ideal
/// generated by e_1..e_n, and of the quotient.
struct QuotientDimension {
  std::size_t raw = 0;
  std::size_t ideal = 0;
  std::size_t quotient() const { return raw - ideal; }
};

/// Since gamma_T commutes with multiplication by symmetric polynomials, the
/// ideal part of gamma_T QI_m in degree d is spanned by e_i * gamma_T (QI_m)_{d-i}.
inline QuotientDimension quotient_isotypic_dimension(std::size_t n, unsigned m, unsigned d, const Tableau& t) {
  QuotientDimension q;
  const auto top = gamma_images(graded_dimension_oracle(n, m, d).basis, t);
  q.raw = poly_rank(top);
  std::vector<MultiPoly> ideal;
  for (std::size_t i = 1; i <= n && i <= d; ++i) {
    const MultiPoly e = elementary_symmetric(n, i);
    const auto lower = span_basis(gamma_images(graded_dimension_oracle(n, m, d - static_cast<unsigned>(i)).basis, t));
    for (const auto& b : lower) ideal.push_back(e * b);
  }
  q.ideal = poly_rank(ideal);
  return q;
}

/// Basis of the degree-d piece of gamma_T R ∩ V_T^{2m+1} R, computed without
/// reference to the quasiinvariance constraints: take a basis of gamma_T R_d
/// and impose (x_a - x_b)^{2m+1} | W for every same-column pair.
inline std::vector<MultiPoly> gamma_vt_intersection_basis(const Tableau& t, unsigned m, unsigned d) {
  const std::size_t n = t.size();
  std::vector<MultiPoly> monos;
  for (auto& e : monomials_of_degree(n, d)) monos.push_back(MultiPoly::monomial(std::move(e)));
  const auto image = span_basis(gamma_images(monos, t));
  const auto factors = v_t_factors(t, 2 * m + 1);
  if (factors.empty() || image.empty()) return image;

  using RowKey = std::pair<std::size_t, Exponent>;
  std::map<RowKey, std::size_t> row_index;
  IntMatrix rows;
  std::vector<std::vector<RatVector>> pending;
  std::vector<RatVector> rat_rows;
  for (std::size_t col = 0; col < image.size(); ++col) {
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& bf = factors[f];
      const MultiPoly shifted = shift_variable(image[col], bf.a, bf.b, +1);
      for (const auto& [e, c] : shifted.terms()) {
        if (e[bf.a - 1] > 2 * m) continue;
        auto [it, inserted] = row_index.try_emplace(RowKey{f, e}, rat_rows.size());
        if (inserted) rat_rows.emplace_back(image.size(), BigRational(0));
        rat_rows[it->second][col] += c;
      }
    }
  }
  const auto null = nullspace(to_integer_rows(rat_rows), image.size());
  std::vector<MultiPoly> out;
  for (const auto& v : null) {
    MultiPoly p(n);
    for (std::size_t c = 0; c < image.size(); ++c)
      if (v[c] != 0) p += image[c] * v[c];
    out.push_back(std::move(p));
  }
  return out;
}

/// Returns Delta_n^2 * p, which must be (m+1)-quasiinvariant.
inline MultiPoly delta_sq_embed(const MultiPoly& p, unsigned m) {
  if (!is_quasiinvariant(p, m))
    throw ContractError("delta_sq_embed: input is not " + std::to_string(m) + "-quasiinvariant");
  const MultiPoly v = vandermonde(p.nvars());
  MultiPoly r = v * v * p;
  if (!is_quasiinvariant(r, m + 1))
    throw TheoremViolation("Delta^2 * p is not " + std::to_string(m + 1) + "-quasiinvariant: " + to_text(p));
  return r;
}

// ---------------------------------------------------------------------------
// Sampled containment suites for the characterization
//   gamma_T QI_m = gamma_T R ∩ V_T^{2m+1} R.

/// Deterministic sampler: mt19937_64 with plain modular reduction, so the
/// stream is fixed by the seed on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound) {
    long v = uniform(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

  /// Homogeneous degree-d polynomial with up to `terms` random monomials.
  MultiPoly homogeneous(std::size_t n, unsigned d, std::size_t terms) {
    const auto monos = monomials_of_degree(n, d);
    MultiPoly p(n);
    for (std::size_t k = 0; k < terms; ++k)
      p.add_term(monos[static_cast<std::size_t>(uniform(0, static_cast<long>(monos.size()) - 1))],
                 BigRational(nonzero(5)));
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

struct MainCheckReport {
  std::size_t n = 0;
  unsigned m = 0;
  unsigned max_degree = 0;
  std::uint64_t seed = 0;
  std::size_t witness_checks = 0;    // gamma_T Q tested for Q in oracle witnesses
  std::size_t dimension_checks = 0;  // (T, d) pairs with dim gamma_T QI_m = dim intersection
  std::size_t sampled = 0;           // random W in the intersection tested for quasiinvariance
  std::size_t filtered_tried = 0;    // gamma_T(V_T^{2m+1} r) candidates
  std::size_t filtered_kept = 0;     // ... of which V_T^{2m+1} still divides
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// (a) gamma_T Q ∈ V_T^{2m+1} R and is quasiinvariant for every oracle witness
///     element Q, and the graded dimensions of both sides agree;
/// (b) random W with gamma_T W = W and V_T^{2m+1} | W are quasiinvariant.
inline MainCheckReport theorem_main_checks(std::size_t n, unsigned m, std::size_t samples, std::uint64_t seed,
                                           unsigned max_degree) {
  MainCheckReport rep;
  rep.n = n;
  rep.m = m;
  rep.max_degree = max_degree;
  rep.seed = seed;
  const auto tableaux = standard_tableaux_of_size(static_cast<int>(n));
  std::map<std::pair<std::size_t, unsigned>, std::vector<MultiPoly>> intersections;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const QIWitness w = graded_dimension_oracle(n, m, d);
    for (std::size_t ti = 0; ti < tableaux.size(); ++ti) {
      const Tableau& t = tableaux[ti];
      const auto images = gamma_images(w.basis, t);
      for (std::size_t b = 0; b < images.size(); ++b) {
        ++rep.witness_checks;
        if (!divisible_by_v_t_power(images[b], t, m) || !is_quasiinvariant(images[b], m))
          rep.failures.push_back("gamma_T Q outside V_T^(2m+1) R ∩ QI_m: T=" + t.to_string() + " d=" +
                                 std::to_string(d) + " Q=" + to_text(w.basis[b]));
      }
      auto inter = gamma_vt_intersection_basis(t, m, d);
      ++rep.dimension_checks;
      const std::size_t lhs = poly_rank(images);
      if (lhs != inter.size())
        rep.failures.push_back("dimension mismatch T=" + t.to_string() + " d=" + std::to_string(d) +
                               ": gamma_T QI_m has " + std::to_string(lhs) + ", intersection has " +
                               std::to_string(inter.size()));
      intersections[{ti, d}] = std::move(inter);
    }
  }

  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto ti = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(tableaux.size()) - 1));
    const auto d = static_cast<unsigned>(rng.uniform(0, max_degree));
    const Tableau& t = tableaux[ti];

    // spec-style candidate: gamma_T(V_T^{2m+1} r), kept only if still divisible
    const MultiPoly vpow = v_t(t).pow(2 * m + 1);
    const int rdeg = static_cast<int>(d) - vpow.degree();
    if (rdeg >= 0) {
      ++rep.filtered_tried;
      const MultiPoly cand = apply(gamma(t), vpow * rng.homogeneous(n, static_cast<unsigned>(rdeg), 3));
      if (divisible_by_v_t_power(cand, t, m)) {
        ++rep.filtered_kept;
        if (!is_quasiinvariant(cand, m))
          rep.failures.push_back("filtered sample not quasiinvariant: T=" + t.to_string() + " W=" + to_text(cand));
      }
    }

    // random element of the intersection itself
    const auto& basis = intersections.at({ti, d});
    if (basis.empty()) continue;
    MultiPoly w(n);
    for (const auto& b : basis) w += b * BigRational(rng.uniform(-3, 3));
    ++rep.sampled;
    if (!is_quasiinvariant(w, m))
      rep.failures.push_back("intersection sample not quasiinvariant: T=" + t.to_string() + " W=" + to_text(w));
  }
  return rep;
}

}  // namespace qi
