#pragma once

/// \file suites.hpp
/// \brief Named verification suites behind `qi_cli verify` and the acceptance
/// binary. Each suite returns ordered check lines; rendering is deterministic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qi/json_io.hpp"

namespace qi {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<std::string> counterexamples;  // first few only
};

struct SuiteReport {
  std::string suite;
  std::size_t n = 0;
  unsigned m = 0;
  std::uint64_t seed = 0;
  std::vector<CheckLine> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "suite=" << suite << " n=" << n << " m=" << m << " seed=" << seed << "\n";
    for (const auto& c : checks) {
      os << c.name << ": " << (c.pass ? "PASS" : "FAIL");
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << "\n";
      for (const auto& x : c.counterexamples) os << "  counterexample: " << x << "\n";
    }
    os << "overall: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }

  Json to_json() const {
    Json lines = Json::array();
    for (const auto& c : checks)
      lines.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"counterexamples", c.counterexamples}});
    return {{"suite", suite}, {"n", n}, {"m", m}, {"seed", seed}, {"checks", std::move(lines)}, {"pass", pass()}};
  }
};

namespace detail {

inline constexpr std::size_t kMaxCounterexamples = 3;

/// Accumulates one check line.
class Tally {
 public:
  explicit Tally(std::string name) { line_.name = std::move(name); }
  void ok() { ++cases_; }
  void fail(std::string what) {
    ++cases_;
    line_.pass = false;
    if (line_.counterexamples.size() < kMaxCounterexamples) line_.counterexamples.push_back(std::move(what));
  }
  void check(bool cond, const std::function<std::string()>& what) { cond ? ok() : fail(what()); }
  /// Runs body, turning any exception into a failure.
  void guard(const std::function<void()>& body, const std::string& where) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(where + ": " + e.what());
    }
  }
  CheckLine finish(std::string detail = {}) {
    line_.detail = detail.empty() ? std::to_string(cases_) + " cases" : std::move(detail);
    return std::move(line_);
  }
  std::size_t cases() const { return cases_; }

 private:
  CheckLine line_;
  std::size_t cases_ = 0;
};

inline std::vector<int> iota_vec(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  return v;
}

inline Perm random_perm(std::size_t n, Sampler& rng) {
  auto v = iota_vec(n);
  for (std::size_t i = n; i > 1; --i)
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
  return Perm(std::move(v));
}

/// Default top degree for oracle-backed suites, sized for desk runtimes.
inline unsigned default_degree(std::size_t n, unsigned m) {
  if (n <= 2) return 2 * m + 4;
  if (n == 3) return std::min(3 * m + 4, 8u);
  return std::min(4 * m + 3, 6u);
}

}  // namespace detail

inline constexpr std::size_t kFactorizationAllOrderings = 5;

/// Factorization of [S_n] and [S_n]' (every ordering for n <= 5, seeded
/// orderings beyond), the zero product [C_i ∪ {k}]' P(T) = 0, alpha-invariance
/// of gamma_T, idempotence of gamma_T, f(PQ) = P f(Q) for symmetric P, and the
/// rank-sum decomposition of oracle witnesses.
inline SuiteReport suite_groupalgebra(std::size_t n, unsigned m, std::uint64_t seed, unsigned max_degree) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kMaxEnumerationSize) throw ResourceError("group algebra suite limited to n <= 8");
  SuiteReport rep{"groupalgebra", n, m, seed, {}};
  Sampler rng(seed);

  {
    detail::Tally t("factorization of [S_n] and [S_n]'");
    const GroupAlgebraElem full[2] = {bracket(n, detail::iota_vec(n), false), bracket(n, detail::iota_vec(n), true)};
    std::vector<std::vector<int>> orders;
    if (n <= kFactorizationAllOrderings) {
      auto v = detail::iota_vec(n);
      do orders.push_back(v);
      while (std::next_permutation(v.begin(), v.end()));
    } else {
      for (int s = 0; s < 6; ++s) orders.push_back(detail::random_perm(n, rng).images());
    }
    for (const auto& o : orders)
      for (int sg = 0; sg < 2; ++sg)
        t.check(sn_factorization(o, sg == 1) == full[sg], [&] {
          return std::string(sg ? "signed" : "unsigned") + " order " + Perm(o).to_string();
        });
    rep.checks.push_back(t.finish(std::to_string(orders.size()) + " orderings x 2 signs"));
  }

  const auto tableaux = standard_tableaux_of_size(static_cast<int>(n));
  {
    detail::Tally zero("zero product [C_i u {T(k,j)}]' P(T)");
    detail::Tally inv("alpha invariance alpha gamma_T = gamma_T");
    for (const auto& tab : tableaux) {
      const GroupAlgebraElem p = row_symmetrizer(tab);
      const GroupAlgebraElem g = gamma(tab);
      for (std::size_t col = 1; col <= tab.num_columns(); ++col)
        for (std::size_t j = col + 1; j <= tab.num_columns(); ++j)
          for (std::size_t k = 1; tab.has_cell(k, j); ++k) {
            const std::string where = tab.to_string() + " i=" + std::to_string(col) + " j=" + std::to_string(j) +
                                      " k=" + std::to_string(k);
            zero.check((col_union_antisym(tab, col, k, j) * p).is_zero(), [&] { return where; });
            inv.check(alpha(tab, col, k, j) * g == g, [&] { return where; });
          }
    }
    rep.checks.push_back(zero.finish());
    rep.checks.push_back(inv.finish());
  }

  {
    detail::Tally t("gamma_T idempotent");
    for (const auto& tab : tableaux) {
      const GroupAlgebraElem g = gamma(tab);
      t.check(g * g == g, [&] { return tab.to_string(); });
    }
    rep.checks.push_back(t.finish());
  }

  {
    detail::Tally t("symmetric factor commutes f(PQ) = P f(Q)");
    for (int s = 0; s < 8; ++s) {
      GroupAlgebraElem f(n);
      for (int term = 0; term < 4; ++term) f.add_term(detail::random_perm(n, rng), BigRational(rng.nonzero(4)));
      MultiPoly sym = MultiPoly::one(n);
      for (int e = 0; e < 2; ++e) sym *= elementary_symmetric(n, static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n))));
      sym += MultiPoly::constant(n, rng.nonzero(3));
      const MultiPoly q = rng.homogeneous(n, static_cast<unsigned>(rng.uniform(0, 3)), 3);
      t.check(apply(f, sym * q) == sym * apply(f, q), [&] { return "f=" + f.to_string() + " Q=" + to_text(q); });
    }
    rep.checks.push_back(t.finish());
  }

  if (n <= kMaxOracleVars) {
    detail::Tally t("isotypic rank sum equals witness dimension");
    for (unsigned d = 0; d <= max_degree; ++d) {
      const QIWitness w = graded_dimension_oracle(n, m, d);
      std::size_t sum = 0;
      for (const auto& tab : tableaux) sum += isotypic_dimension(w, tab);
      t.check(sum == w.dimension(), [&] {
        return "d=" + std::to_string(d) + " sum=" + std::to_string(sum) + " dim=" + std::to_string(w.dimension());
      });
    }
    rep.checks.push_back(t.finish("degrees 0.." + std::to_string(max_degree)));
  }
  return rep;
}

/// gamma_T QI_m = gamma_T R ∩ V_T^{2m+1} R by witnesses, dimensions and samples.
inline SuiteReport suite_thm_main(std::size_t n, unsigned m, std::uint64_t seed, unsigned max_degree,
                                  std::size_t samples = 25) {
  SuiteReport rep{"thm-main", n, m, seed, {}};
  const MainCheckReport r = theorem_main_checks(n, m, samples, seed, max_degree);
  CheckLine line{"summand characterization gamma_T QI_m = gamma_T R n V_T^(2m+1) R", r.pass(), {}, {}};
  line.detail = std::to_string(r.witness_checks) + " witness images, " + std::to_string(r.dimension_checks) +
                " dimension pairs, " + std::to_string(r.sampled) + " intersection samples, " +
                std::to_string(r.filtered_kept) + "/" + std::to_string(r.filtered_tried) +
                " filtered samples, degrees 0.." + std::to_string(max_degree);
  for (std::size_t i = 0; i < r.failures.size() && i < detail::kMaxCounterexamples; ++i)
    line.counterexamples.push_back(r.failures[i]);
  rep.checks.push_back(std::move(line));
  return rep;
}

/// Hook-basis identities over j in 2..n, k in 0..n-2.
inline SuiteReport suite_hook(std::size_t n, unsigned m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("hook suite needs n >= 2");
  SuiteReport rep{"hook", n, m, seed, {}};
  detail::Tally closed("closed form equals integral");
  detail::Tally member("membership gamma_T Q = Q, V_T^(2m+1) | Q, Q quasiinvariant");
  detail::Tally fixed("gamma_T fixes Q");
  detail::Tally limit("lowest quotient limit formula");
  detail::Tally rec("recursion in m");
  detail::Tally deg("degree mn+k+1 and homogeneity");
  for (std::size_t j = 2; j <= n; ++j)
    for (unsigned k = 0; k + 2 <= n; ++k) {
      const HookSpec s{n, m, j, k};
      const std::string w = s.to_string();
      const MultiPoly q = q_integral(s);
      closed.check(q_closed_form(s) == q, [&] { return w; });
      member.check(in_gamma_component(q, s.tableau(), m) && is_quasiinvariant(q, m), [&] { return w; });
      fixed.check(gamma_fixed_check(s), [&] { return w; });
      limit.guard([&] { limit.check(lowest_quotient(s) == lowest_quotient_rhs(s), [&] { return w; }); }, w);
      if (m >= 1) rec.check(recursion_residual(s).is_zero(), [&] { return w; });
      deg.check(q.is_homogeneous() && q.degree() == static_cast<int>(s.degree()), [&] { return w; });
    }
  const std::string grid = "grid " + std::to_string(n - 1) + "x" + std::to_string(n - 1);
  rep.checks.push_back(closed.finish(grid));
  rep.checks.push_back(member.finish(grid));
  rep.checks.push_back(fixed.finish(grid));
  rep.checks.push_back(limit.finish(grid));
  if (m >= 1) rep.checks.push_back(rec.finish(grid));
  rep.checks.push_back(deg.finish(grid));
  return rep;
}

/// L_m Q^{k,m} = k(k-1) Q^{k-2,m}, and L_m stays polynomial on oracle witnesses.
inline SuiteReport suite_lm(std::size_t n, unsigned m, std::uint64_t seed, unsigned max_degree) {
  if (n < 2) throw std::invalid_argument("L_m suite needs n >= 2");
  SuiteReport rep{"lm", n, m, seed, {}};
  detail::Tally eig("L_m eigen-identity");
  for (std::size_t j = 2; j <= n; ++j)
    for (unsigned k = 0; k + 2 <= n; ++k) {
      const HookSpec s{n, m, j, k};
      eig.guard([&] { eig.check(lm_eigen_check(s).is_zero(), [&] { return s.to_string(); }); }, s.to_string());
    }
  rep.checks.push_back(eig.finish("grid " + std::to_string(n - 1) + "x" + std::to_string(n - 1)));
  if (n <= kMaxOracleVars) {
    detail::Tally dom("L_m polynomial on quasiinvariants");
    for (unsigned d = 0; d <= max_degree; ++d)
      for (const auto& p : graded_dimension_oracle(n, m, d).basis)
        dom.guard([&] { apply_lm({n, m}, p); dom.ok(); }, to_text(p));
    rep.checks.push_back(dom.finish());
  }
  return rep;
}

/// Delta^2 QI_m ⊂ QI_{m+1} ⊂ QI_m.
inline SuiteReport suite_chain(std::size_t n, unsigned m, std::uint64_t seed, unsigned max_degree) {
  SuiteReport rep{"chain", n, m, seed, {}};
  const ChainReport r = delta_sq_chain_check(n, m, max_degree);
  CheckLine line{"containment Delta^2 QI_m in QI_(m+1) in QI_m", r.pass(), {}, {}};
  line.detail = std::to_string(r.embedded) + " embedded, " + std::to_string(r.descended) + " descended, degrees 0.." +
                std::to_string(max_degree);
  for (std::size_t i = 0; i < r.failures.size() && i < detail::kMaxCounterexamples; ++i)
    line.counterexamples.push_back(r.failures[i]);
  rep.checks.push_back(std::move(line));
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"groupalgebra", "thm-main", "hook", "lm", "chain", "all"};
  return names;
}

/// Runs a named suite. `max_degree` of 0 selects a default sized for n and m.
inline SuiteReport run_suite(const std::string& name, std::size_t n, unsigned m, std::uint64_t seed,
                             unsigned max_degree = 0) {
  const unsigned deg = max_degree ? max_degree : detail::default_degree(n, m);
  if (name == "groupalgebra") return suite_groupalgebra(n, m, seed, deg);
  if (name == "thm-main") return suite_thm_main(n, m, seed, deg);
  if (name == "hook") return suite_hook(n, m, seed);
  if (name == "lm") return suite_lm(n, m, seed, deg);
  if (name == "chain") return suite_chain(n, m, seed, deg);
  if (name == "all") {
    SuiteReport all{"all", n, m, seed, {}};
    std::vector<std::string> parts{"groupalgebra", "thm-main", "chain"};
    if (n >= 2) parts.insert(parts.begin() + 2, {"hook", "lm"});
    for (const auto& p : parts) {
      SuiteReport r = run_suite(p, n, m, seed, deg);
      for (auto& c : r.checks) {
        c.name = "[" + p + "] " + c.name;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace qi
