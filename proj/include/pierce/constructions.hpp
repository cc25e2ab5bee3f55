#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pierce/rational.hpp"
#include "pierce/ship.hpp"
#include "pierce/verifier.hpp"

namespace pierce {

struct Construction {
  Pattern1D pattern;
  Rational density;
};

/// Raised when the greedy run hits its horizon before its state repeats.
class HorizonExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default step budget for greedy_two_sided: enough to revisit one of the 2^a_n window states.
std::int64_t default_greedy_horizon(Offset largest_gap);

/// Greedy pattern for the two-cell ships {[0,a_1], ..., [0,a_n]}.
///
/// Cells |t| <= a_n start shot. Walking t = a_n+1, a_n+2, ...: an undecided cell becomes a
/// miss and every cell t + a_i becomes a shot. The state is the window of the next a_n cells;
/// once it repeats, the periodic tail is returned with residues taken at absolute positions.
/// Density is at most n/(n+1). `gaps` must be distinct positive integers (any order).
Construction greedy_two_sided(std::vector<Offset> gaps, std::optional<std::int64_t> horizon = std::nullopt);

/// Period-3a pattern for S = [0,a,a+b] and its reflection, density (a+1)/(3a).
///
/// Cell z corresponds to (i, j) with z = ib + ja, 0 <= i < a. Shots are the diagonal
/// i + j = 0 (mod 3) plus a second residue class on column 0 chosen so that the
/// translates of S that wrap from column a-1 to column 0 are hit. Requires gcd(a,b) = 1, a >= b >= 1.
Construction slab_pattern(Offset a, Offset b);

/// Family {[1..k-1, jk] : j = 1..n} (normalized) hit by the multiples of k.
struct EasiestFamily {
  Family family;
  Pattern1D pattern;
};
EasiestFamily easiest_family(std::int64_t n, std::int64_t k);

/// Named fixtures:
///   "evens"          1D (2, {0})
///   "zeros-mod"      1D, misses exactly the multiples of n+1 (param n >= 1)
///   "diag3"          2D (3,3), cells with i - j = 0 (mod 3)
///   "even-rows"      2D (1,2), cells with even y
using NamedPattern = std::variant<Pattern1D, Pattern2D>;
NamedPattern reference_pattern(const std::string& name, std::int64_t param = 0);
std::vector<std::string> reference_pattern_names();

/// The L-triomino {(0,0),(1,0),(0,1)} and the two-ship families built from it.
Ship2D l_triomino();
/// {L, L turned 180 degrees}.
Family2D l_family_180();
/// {L, L turned 90 degrees}.
Family2D l_family_90();

}  // namespace pierce
