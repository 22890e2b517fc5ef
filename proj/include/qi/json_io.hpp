#pragma once

/// \file json_io.hpp
/// \brief Canonical JSON for polynomials, tableaux and reports.
///
/// Polynomial: {"nvars": n, "terms": [{"exp": [a_1..a_n], "num": "p", "den": "q"}, ...]}
/// with terms in graded-lex descending order; exp[i] is the exponent of x_{i+1}.
/// Coefficients are strings so that arbitrarily large integers survive.

#include <json.hpp>

#include <string>

#include "qi/structure.hpp"

namespace qi {

using Json = nlohmann::ordered_json;

inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline MultiPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON needs \"nvars\" and \"terms\"");
  if (!j["nvars"].is_number_unsigned() || j["nvars"].get<std::size_t>() == 0)
    throw std::invalid_argument("\"nvars\" must be a positive integer");
  const auto n = j["nvars"].get<std::size_t>();
  if (!j["terms"].is_array()) throw std::invalid_argument("\"terms\" must be an array");
  MultiPoly p(n);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("num"))
      throw std::invalid_argument("each term needs \"exp\" and \"num\"");
    auto e = t["exp"].get<Exponent>();
    if (e.size() != n)
      throw DimensionError("exponent vector of length " + std::to_string(e.size()) + " in a polynomial of " +
                           std::to_string(n) + " variables");
    auto field = [&](const char* key, const char* fallback) -> std::string {
      if (!t.contains(key)) return fallback;
      const auto& v = t[key];
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number_integer()) return std::to_string(v.get<long long>());
      throw std::invalid_argument(std::string("\"") + key + "\" must be a string or integer");
    };
    p.add_term(std::move(e), parse_rational(field("num", "0"), field("den", "1")));
  }
  return p;
}

inline Json to_json(const Tableau& t) {
  return {{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

inline Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("tableau JSON needs \"rows\"");
  return Tableau(j["rows"].get<std::vector<std::vector<int>>>());
}

inline Json to_json(const PowerSeriesQ& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(c.get_str());
  return a;
}

inline Json to_json(const QIWitness& w, std::uint64_t seed) {
  Json basis = Json::array();
  for (const auto& p : w.basis) basis.push_back(to_json(p));
  return {{"n", w.n}, {"m", w.m}, {"degree", w.degree}, {"dimension", w.dimension()}, {"seed", seed},
          {"basis", std::move(basis)}};
}

inline Json to_json(const HilbertReport& r, std::uint64_t seed) {
  Json shapes = Json::array();
  for (const auto& s : r.shapes) {
    Json tab = Json::array();
    for (std::size_t i = 0; i < s.tableaux.size(); ++i)
      tab.push_back({{"tableau", to_json(s.tableaux[i])}, {"exponent", s.exponents[i]}});
    shapes.push_back({{"shape", s.shape.parts()},
                      {"f", s.f},
                      {"content", content(s.shape)},
                      {"tableaux", std::move(tab)},
                      {"isotypic_series", to_json(s.isotypic)}});
  }
  Json out = {{"n", r.n},           {"m", r.m},
              {"D", r.truncation},  {"seed", seed},
              {"shapes", std::move(shapes)},
              {"numerator", to_json(r.numerator)},
              {"series", to_json(r.total)}};
  if (r.oracle) {
    Json cmp = Json::array();
    for (std::size_t d = 0; d < r.oracle->size(); ++d)
      cmp.push_back({{"degree", d},
                     {"series", r.total[d].get_str()},
                     {"oracle", (*r.oracle)[d]},
                     {"match", r.total[d] == static_cast<unsigned long>((*r.oracle)[d])}});
    out["oracle"] = std::move(cmp);
    out["oracle_agrees"] = r.oracle_agrees();
  }
  return out;
}

}  // namespace qi
