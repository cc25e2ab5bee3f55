#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pierce/rational.hpp"
#include "pierce/ship.hpp"
#include "pierce/solver.hpp"

namespace pierce {

/// All normalized k-cell ships with span <= span_budget, in lexicographic order.
std::vector<Ship> ships_within(std::int64_t k, Offset span_budget);

/// True if f is the representative the enumeration emits: gcd of all offsets is 1
/// (or every ship is a single cell) and f is not larger than its reflection.
bool is_canonical(const Family& f);

/// Calls `visit` once per canonical family of n distinct k-cell ships of span <= span_budget,
/// in lexicographic order. Returning false from `visit` stops the walk.
void for_each_family(std::int64_t n, std::int64_t k, Offset span_budget,
                     const std::function<bool(const Family&)>& visit);
std::vector<Family> enumerate_families(std::int64_t n, std::int64_t k, Offset span_budget);

/// Number of families of n distinct normalized k-cell ships of span <= span_budget,
/// before quotienting by scaling and reflection.
std::uint64_t noncanonical_family_count(std::int64_t n, std::int64_t k, Offset span_budget);

struct FamilyDensity {
  Family family;
  Rational density;
};

struct SearchReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  Offset span_budget = 0;
  std::optional<FamilyDensity> max;
  std::optional<FamilyDensity> min;
  std::uint64_t families_examined = 0;
  std::uint64_t noncanonical_families = 0;
};

struct SearchOptions {
  SolveOptions solve;
  unsigned workers = 1;
  /// Per-family results file; existing entries are reused on restart.
  std::optional<std::filesystem::path> results_file;
  std::uint64_t checkpoint_every = 256;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

/// Exact maximum and minimum density over the enumerated families. Ties go to the
/// lexicographically smallest family. Output does not depend on the worker count.
SearchReport compute_extremes(std::int64_t n, std::int64_t k, Offset span_budget, const SearchOptions& options = {});

/// Per-family densities in enumeration order, with the same worker/resume machinery.
std::vector<FamilyDensity> solve_all(std::int64_t n, std::int64_t k, Offset span_budget,
                                     const SearchOptions& options = {});

/// The summary block appended to results files ("# ..." lines).
std::string summary_block(const SearchReport& report);

/// One row per coprime pair b <= a <= max_a: density of {[0,a,a+b], reflection}.
struct ReflectionCase {
  Offset a = 0;
  Offset b = 0;
  Family family;
  Rational density;
};
struct ReflectionCheck {
  std::vector<ReflectionCase> cases;
  /// All densities <= 2/5, and equal to 2/5 exactly for (a,b) in {(2,1),(3,1)}.
  bool holds = false;
};
ReflectionCheck check_theorem32(Offset max_a = 5, const SolveOptions& options = {});

/// Toughest-instance table: for n = 1..max_n and k = k_min..k_max, search with span budget
/// total_budget - n.
std::vector<SearchReport> toughest_table(std::int64_t max_n, std::int64_t k_min, std::int64_t k_max,
                                         Offset total_budget, const SearchOptions& options = {});

}  // namespace pierce
