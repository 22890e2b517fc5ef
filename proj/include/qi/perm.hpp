#pragma once

/// \file perm.hpp
/// \brief Permutations of {1..n} and their action on Q[x_1..x_n].
///
/// Composition: (a * b)(i) = a(b(i)). The action is
///   (sigma P)(x_1, ..., x_n) = P(x_{sigma(1)}, ..., x_{sigma(n)}),
/// which is a left action under this composition: a(bP) = (a*b)P.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qi/multipoly.hpp"

namespace qi {

/// Largest |U| for which S_U is enumerated.
inline constexpr std::size_t kMaxEnumerationSize = 8;

class Perm {
 public:
  /// images[i-1] = sigma(i)
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v])
        throw std::invalid_argument("images do not form a permutation of 1..n");
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  static Perm transposition(std::size_t n, int a, int b) {
    Perm p = identity(n);
    p.check_point(a);
    p.check_point(b);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
  }

  /// Parses cycle notation, e.g. "(1,2)(3,4,5)"; "()" or "1" is the identity.
  static Perm parse_cycles(std::size_t n, const std::string& text) {
    Perm p = identity(n);
    if (text == "1" || text == "id") return p;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(') throw std::invalid_argument("bad cycle notation: " + text);
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle notation: " + text);
      std::vector<int> cycle;
      std::string body = text.substr(pos + 1, close - pos - 1);
      std::size_t start = 0;
      while (start < body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        const std::string tok = body.substr(start, comma - start);
        if (!tok.empty()) cycle.push_back(std::stoi(tok));
        start = comma + 1;
      }
      Perm c = identity(n);
      std::set<int> distinct(cycle.begin(), cycle.end());
      if (distinct.size() != cycle.size()) throw std::invalid_argument("repeated point in cycle: " + text);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        c.check_point(cycle[k]);
        c.images_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
      }
      p = p * c;
      pos = close + 1;
    }
    return p;
  }

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i + 1)) return false;
    return true;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw DimensionError("composing permutations of different degree");
    std::vector<int> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.images_[static_cast<std::size_t>(b.images_[i] - 1)];
    return Perm(std::move(v));
  }

  Perm inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Perm(std::move(v));
  }

  /// +1 or -1
  int sign() const {
    std::vector<bool> seen(images_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// Nontrivial cycles, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == static_cast<int>(i + 1)) continue;
      std::vector<int> c;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
        seen[j] = true;
        c.push_back(static_cast<int>(j + 1));
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// "(1,2)(3,4,5)"; the identity prints as "1".
  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "1";
    std::string s;
    for (const auto& c : cs) {
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
      s += ")";
    }
    return s;
  }

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

  void check_point(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > images_.size())
      throw std::out_of_range("point " + std::to_string(i) + " outside 1.." + std::to_string(images_.size()));
  }

 private:
  std::vector<int> images_;
};

/// All |U|! permutations of {1..n} fixing the complement of U pointwise, in
/// lexicographic order of their image vectors.
inline std::vector<Perm> symmetric_group_on(std::size_t n, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::invalid_argument("subset has repeated points");
  if (subset.size() > kMaxEnumerationSize)
    throw ResourceError("refusing to enumerate S_U with |U| = " + std::to_string(subset.size()) +
                        " > " + std::to_string(kMaxEnumerationSize));
  const Perm id = Perm::identity(n);
  for (int u : subset) id.check_point(u);
  std::vector<Perm> out;
  std::vector<int> arrangement = subset;
  do {
    std::vector<int> v = id.images();
    for (std::size_t k = 0; k < subset.size(); ++k) v[static_cast<std::size_t>(subset[k] - 1)] = arrangement[k];
    out.emplace_back(std::move(v));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

/// sigma P, i.e. P(x_{sigma(1)}, ..., x_{sigma(n)}): the monomial prod x_i^{a_i}
/// goes to prod x_{sigma(i)}^{a_i}.
inline MultiPoly act(const Perm& s, const MultiPoly& p) {
  if (s.size() != p.nvars()) throw DimensionError("permutation degree does not match nvars");
  MultiPoly r(p.nvars());
  Exponent f(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(s.images()[i] - 1)] = e[i];
    r.add_term(f, c);
  }
  return r;
}

}  // namespace qi
