#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qi;
using qt::x;

TEST(Json, PolynomialRoundTrip) {
  qt::Gen g(81);
  for (int it = 0; it < 30; ++it) {
    const MultiPoly p = g.poly(static_cast<std::size_t>(g.range(1, 4)), 4, 6);
    EXPECT_EQ(poly_from_json(Json::parse(to_json(p).dump())), p);
  }
}

TEST(Json, CanonicalForm) {
  const Json j = to_json(q_integral({2, 1, 2, 0}));
  EXPECT_EQ(j.dump(),
            R"({"nvars":2,"terms":[{"exp":[3,0],"num":"1","den":"6"},{"exp":[2,1],"num":"-1","den":"2"},)"
            R"({"exp":[1,2],"num":"1","den":"2"},{"exp":[0,3],"num":"-1","den":"6"}]})");
  // integer coefficients are accepted on input, den defaults to 1
  const auto p = poly_from_json(Json::parse(R"({"nvars":2,"terms":[{"exp":[1,0],"num":3}]})"));
  EXPECT_EQ(p, x(2, 1) * BigRational(3));
}

TEST(Json, Errors) {
  EXPECT_THROW(poly_from_json(Json::parse(R"({"terms":[]})")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"nvars":2,"terms":[{"exp":[1],"num":"1"}]})")), DimensionError);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"nvars":2,"terms":[{"exp":[1,0],"num":"1","den":"0"}]})")),
               std::domain_error);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"nvars":0,"terms":[]})")), std::invalid_argument);
}

TEST(Json, TableauAndReports) {
  const Tableau t({{1, 3}, {2}});
  EXPECT_EQ(tableau_from_json(to_json(t)), t);
  const auto h = full_hilbert(2, 1, 5);
  const Json j = to_json(h, 7);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["numerator"].dump(), R"(["1","0","0","1","0","0"])");
  const Json w = to_json(graded_dimension_oracle(2, 1, 3), 1);
  EXPECT_EQ(w["dimension"], 3);
}

TEST(Suites, DeterministicAndNamed) {
  const auto a = run_suite("all", 3, 1, 42), b = run_suite("all", 3, 1, 42);
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_TRUE(a.pass()) << a.to_text();
  EXPECT_NE(a.to_text().find("seed=42"), std::string::npos);
  const auto lm = run_suite("lm", 3, 1, 1);
  EXPECT_NE(lm.to_text().find("L_m eigen-identity: PASS (grid 2x2)"), std::string::npos);
  EXPECT_TRUE(run_suite("all", 2, 0, 1).pass());
  EXPECT_THROW(run_suite("nope", 2, 0, 1), std::invalid_argument);
}
