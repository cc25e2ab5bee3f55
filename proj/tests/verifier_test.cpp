#include <doctest.h>

#include "pierce/constructions.hpp"
#include "pierce/solver.hpp"
#include "pierce/verifier.hpp"

using namespace pierce;

TEST_CASE("verify_pattern_1d") {
  const Pattern1D evens(2, {0});
  CHECK_FALSE(verify_pattern_1d(evens, Family{{0, 1}}));

  const auto miss = verify_pattern_1d(evens, Family{{0, 2}});
  REQUIRE(miss);
  CHECK(*miss == Miss1D{0, 1});

  SUBCASE("first failing ship wins") {
    const auto m = verify_pattern_1d(Pattern1D(3, {0}), Family{{0, 1}, {0, 3}});
    REQUIRE(m);
    CHECK(*m == Miss1D{0, 1});
  }
  SUBCASE("empty pattern misses immediately") {
    const auto m = verify_pattern_1d(Pattern1D(4, {}), Family{{0}});
    REQUIRE(m);
    CHECK(*m == Miss1D{0, 0});
  }
}

TEST_CASE("solver pattern for [0,1,3] verifies") {
  const Family f{{0, 1, 3}};
  const auto r = exact_density(f);
  CHECK(r.pattern.period() == 5);
  CHECK(r.pattern.residues().size() == 2);
  CHECK_FALSE(verify_pattern_1d(r.pattern, f));
}

TEST_CASE("pattern_density") {
  CHECK(pattern_density(Pattern1D(2, {0})) == Rational(1, 2));
  CHECK(pattern_density(Pattern1D(5, {0, 2})) == Rational(2, 5));
  CHECK(pattern_density(Pattern1D(6, {0, 3})) == Rational(1, 3));
  CHECK(pattern_density(std::get<Pattern2D>(reference_pattern("diag3"))) == Rational(1, 3));
}

TEST_CASE("verify_pattern_2d on the L-triomino families") {
  const auto diag3 = std::get<Pattern2D>(reference_pattern("diag3"));
  const auto even_rows = std::get<Pattern2D>(reference_pattern("even-rows"));
  CHECK_FALSE(verify_pattern_2d(diag3, l_family_180()));
  CHECK_FALSE(verify_pattern_2d(even_rows, l_family_90()));
  CHECK_FALSE(verify_pattern_2d(even_rows, l_family_180()));

  const auto miss = verify_pattern_2d(diag3, l_family_90());
  REQUIRE(miss);
  // The quarter-turned L at (n, m) covers i - j residues c, c+1, c with c = n - m; it is
  // missed exactly when c = 1 (mod 3). The first such shift in scan order is (0, 2).
  CHECK(miss->ship == 1);
  CHECK(miss->shift == Cell2D{0, 2});
}

TEST_CASE("pattern text formats") {
  const Pattern1D p = parse_pattern_1d("5: 0, 2");
  CHECK(p == Pattern1D(5, {0, 2}));
  CHECK(to_string(p) == "5:0,2");
  CHECK(parse_pattern_1d("3:") == Pattern1D(3, {}));
  CHECK_THROWS_AS(parse_pattern_1d("5"), ParseError);
  CHECK_THROWS_AS(parse_pattern_1d("5:7"), ParseError);
  CHECK_THROWS_AS(parse_pattern_1d("0:"), ParseError);

  const Pattern2D q = parse_pattern_2d("3,3:(0,0),(1,1),(2,2)");
  CHECK(q == std::get<Pattern2D>(reference_pattern("diag3")));
  CHECK(to_string(q) == "3,3:(0,0),(1,1),(2,2)");
  CHECK(parse_pattern_2d("1,2:(0,0)").density() == Rational(1, 2));
  CHECK_THROWS_AS(parse_pattern_2d("3:(0,0)"), ParseError);
  CHECK_THROWS_AS(parse_pattern_2d("3,3:(0,3)"), ParseError);
  CHECK_THROWS_AS(parse_pattern_2d("3,3:(0,0"), ParseError);
}

TEST_CASE("verifier properties") {
  const Family f{{0, 1, 3}, {0, 2}};
  const auto solved = exact_density(f);
  REQUIRE_FALSE(verify_pattern_1d(solved.pattern, f));

  SUBCASE("sub-families and super-ships stay pierced") {
    CHECK_FALSE(verify_pattern_1d(solved.pattern, Family{{0, 1, 3}}));
    CHECK_FALSE(verify_pattern_1d(solved.pattern, Family{{0, 2}}));
    CHECK_FALSE(verify_pattern_1d(solved.pattern, Family{{0, 1, 2, 3}, {0, 2, 5}}));
  }
  SUBCASE("stretching matches scaling") {
    for (Offset d : {2, 3}) {
      CHECK_FALSE(verify_pattern_1d(solved.pattern.stretched(d), f.scaled(d)));
      CHECK(solved.pattern.stretched(d).density() == solved.pattern.density());
      // A pattern that fails keeps failing after both are scaled.
      const Pattern1D bad(2, {0});
      CHECK(verify_pattern_1d(bad, f).has_value() == verify_pattern_1d(bad.stretched(d), f.scaled(d)).has_value());
    }
  }
  SUBCASE("translation invariance") {
    const Family shifted{Ship{7, 8, 10}, Ship{-4, -2}};
    CHECK(shifted == f);
  }
}
