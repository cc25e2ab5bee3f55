#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pierce/solver.hpp"

using namespace pierce;

namespace {

Family random_family(std::mt19937& rng, Offset max_span, int max_ships) {
  std::vector<Ship> ships;
  const int count = 1 + static_cast<int>(rng() % max_ships);
  for (int i = 0; i < count; ++i) {
    std::vector<Offset> cells{0};
    const Offset last = 1 + static_cast<Offset>(rng() % (max_span - 1));
    for (Offset c = 1; c < last; ++c) {
      if (rng() % 2) cells.push_back(c);
    }
    cells.push_back(last);
    ships.emplace_back(std::move(cells));
  }
  return Family(std::move(ships));
}

}  // namespace

TEST_CASE("exact_density examples") {
  SUBCASE("[0,1,3]") {
    const auto r = exact_density(Family{{0, 1, 3}});
    CHECK(r.density == Rational(2, 5));
    CHECK(r.pattern.density() == r.density);
  }
  SUBCASE("single cell") {
    const auto r = exact_density(Family{{0}});
    CHECK(r.density == Rational(1));
    CHECK(r.pattern == Pattern1D(1, {0}));
  }
  SUBCASE("single cell among others") {
    CHECK(exact_density(Family{{0}, {0, 5, 9}}).density == Rational(1));
  }
  SUBCASE("{[0,1],[0,2,4]}") { CHECK(exact_density(Family{{0, 1}, {0, 2, 4}}).density == Rational(3, 5)); }
  SUBCASE("{[0,1],[0,2]}") { CHECK(exact_density(Family{{0, 1}, {0, 2}}).density == Rational(2, 3)); }
  SUBCASE("single two-cell ship") { CHECK(exact_density(Family{{0, 7}}).density == Rational(1, 2)); }
}

TEST_CASE("canonical witness for [0,1]") {
  // Valid windows 01, 10, 11 are words 1, 2, 3; the optimal cycle is 1 -> 2 -> 1.
  const auto r = exact_density(Family{{0, 1}});
  CHECK(r.stats.nodes == 3);
  CHECK(r.stats.cycle_length == 2);
  CHECK(r.pattern == Pattern1D(2, {0}));
}

TEST_CASE("span cap refusal") {
  const Family wide{{0, 1, 30}};
  try {
    exact_density(wide, {.span_cap = 12});
    FAIL("expected a refusal");
  } catch (const SpanCapExceeded& e) {
    CHECK(e.required() == 31);
    CHECK(e.cap() == 12);
  }
  // The cap applies to the reduced family.
  CHECK(exact_density(Family{{0, 10, 20}}, {.span_cap = 3}).density == Rational(1, 3));
  CHECK_THROWS_AS(exact_density(Family{{0, 1, 20}}, {.span_cap = 22, .memory_limit = 1 << 20}), MemoryBudgetExceeded);
}

TEST_CASE("scaled families return stretched patterns") {
  const Family f{{0, 2}, {0, 4}};
  const auto r = exact_density(f);
  CHECK(r.density == Rational(2, 3));
  CHECK(r.stats.scale == 2);
  CHECK_FALSE(verify_pattern_1d(r.pattern, f));
}

TEST_CASE("exact_density matches the closed-walk oracle") {
  SUBCASE("every single ship up to span 7") {
    for (const auto& f : oracle::small_families(7, 1)) {
      const auto [reduced, d] = scale_reduce(f);
      if (reduced.min_ship_size() == 1) continue;
      const auto expected = oracle::closed_walk_min_mean(oracle::window_graph(reduced, reduced.span()));
      REQUIRE(expected);
      CHECK_MESSAGE(exact_density(f).density == *expected, to_string(f));
    }
  }
  SUBCASE("random families up to span 8") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      const Family f = random_family(rng, 8, 3);
      const auto [reduced, d] = scale_reduce(f);
      if (reduced.min_ship_size() == 1) continue;
      const auto expected = oracle::closed_walk_min_mean(oracle::window_graph(reduced, reduced.span()));
      CHECK_MESSAGE(exact_density(f).density == *expected, to_string(f));
    }
  }
}

TEST_CASE("solver invariants") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const Family f = random_family(rng, 9, 3);
    const auto r = exact_density(f);
    INFO(to_string(f));

    CHECK_FALSE(verify_pattern_1d(r.pattern, f));
    CHECK(r.pattern.density() == r.density);
    CHECK(exact_density(f.reflected()).density == r.density);
    for (Offset d : {2, 3}) CHECK(exact_density(f.scaled(d)).density == r.density);

    Rational single_max(0);
    for (const auto& s : f.ships()) single_max = std::max(single_max, exact_density(Family{s}).density);
    CHECK(single_max <= r.density);
    CHECK(r.density <= Rational(1));

    // Dropping a cell from a ship never makes the family easier.
    const auto& victim = f[rng() % f.size()];
    if (victim.size() > 1) {
      std::vector<Offset> cells = victim.offsets();
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(rng() % cells.size()));
      std::vector<Ship> ships = f.ships();
      std::replace(ships.begin(), ships.end(), victim, Ship(cells));
      CHECK(exact_density(Family(ships)).density >= r.density);
    }
  }
}

TEST_CASE("unreduced window graph agrees with the reduction") {
  // Solving d*F on its own window graph must give the same value as solving F.
  for (const auto& f : {Family{{0, 1, 3}}, Family{{0, 1}, {0, 2}}, Family{{0, 2, 3}, {0, 1, 4}}}) {
    for (Offset d : {2, 3}) {
      const Family scaled = f.scaled(d);
      const WindowGraph g(scaled, scaled.span());
      CHECK(min_mean_cycle(g.graph()).mean == exact_density(f).density);
    }
  }
}
