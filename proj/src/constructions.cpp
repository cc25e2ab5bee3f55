#include "pierce/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace pierce {

std::int64_t default_greedy_horizon(Offset largest_gap) {
  return (std::int64_t{1} << largest_gap) * (largest_gap + 1) + largest_gap;
}

Construction greedy_two_sided(std::vector<Offset> gaps, std::optional<std::int64_t> horizon) {
  if (gaps.empty()) throw std::invalid_argument("need at least one gap");
  std::sort(gaps.begin(), gaps.end());
  if (gaps.front() < 1) throw std::invalid_argument("gaps must be positive");
  if (std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end()) throw std::invalid_argument("gaps must be distinct");
  const Offset largest = gaps.back();
  if (largest > 62) throw std::invalid_argument("largest gap too big for the window state");
  const std::int64_t budget = horizon.value_or(default_greedy_horizon(largest));

  // Bit j of `ahead` says cell t+j is already forced to be a shot. Cells <= a_n start shot,
  // so at t = a_n + 1 nothing ahead is forced yet.
  std::uint64_t ahead = 0;
  std::unordered_map<std::uint64_t, std::int64_t> first_seen;
  std::vector<bool> shots;  // shots[t - start]
  const Offset start = largest + 1;
  for (std::int64_t step = 0; step <= budget; ++step) {
    if (auto [it, inserted] = first_seen.emplace(ahead, step); !inserted) {
      const std::int64_t from = it->second;
      const Offset period = step - from;
      std::vector<Offset> residues;
      for (std::int64_t s = from; s < step; ++s) {
        if (shots[static_cast<std::size_t>(s)]) residues.push_back((start + s) % period);
      }
      Pattern1D pattern(period, std::move(residues));
      const Rational density = pattern.density();
      return {std::move(pattern), density};
    }
    const bool shot = (ahead & 1u) != 0;
    shots.push_back(shot);
    if (!shot) {
      for (Offset a : gaps) ahead |= std::uint64_t{1} << a;
    }
    ahead >>= 1;
  }
  throw HorizonExhausted("greedy state did not repeat within " + std::to_string(budget) +
                         " steps; increase the horizon");
}

Construction slab_pattern(Offset a, Offset b) {
  if (a < 1 || b < 1) throw std::invalid_argument("a and b must be positive");
  if (a < b) throw std::invalid_argument("need a >= b");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("a and b must be coprime");

  // A wrapping translate of [0,a,a+b] starting at (a-1, j) is missed by the diagonal exactly
  // when a-1+j = 1 (mod 3); its third cell then sits at (0, j+1+b) with j+1+b = b-a (mod 3).
  const Offset wrap_class = ((b - a) % 3 + 3) % 3;
  const Offset boost_class = wrap_class == 0 ? 1 : wrap_class;

  // Inverse of b modulo a, to map a cell back to its column.
  Offset b_inv = 0;
  for (Offset c = 0; c < a; ++c) {
    if ((c * b) % a == 1 % a) {
      b_inv = c;
      break;
    }
  }
  const Offset period = 3 * a;
  std::vector<Offset> residues;
  for (Offset z = 0; z < period; ++z) {
    const Offset i = (z % a) * b_inv % a;
    const Offset j = (z - i * b) / a;  // exact; may be negative
    const Offset jm = ((j % 3) + 3) % 3;
    const bool diagonal = (i + jm) % 3 == 0;
    const bool boosted = i == 0 && jm == boost_class;
    if (diagonal || boosted) residues.push_back(z);
  }
  Pattern1D pattern(period, std::move(residues));
  const Rational density = pattern.density();
  return {std::move(pattern), density};
}

EasiestFamily easiest_family(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  std::vector<Ship> ships;
  for (std::int64_t j = 1; j <= n; ++j) {
    std::vector<Offset> cells;
    for (Offset c = 1; c < k; ++c) cells.push_back(c);
    cells.push_back(j * k);
    ships.emplace_back(std::move(cells));
  }
  return {Family(std::move(ships)), Pattern1D(k, {0})};
}

NamedPattern reference_pattern(const std::string& name, std::int64_t param) {
  if (name == "evens") return Pattern1D(2, {0});
  if (name == "zeros-mod") {
    if (param < 1) throw std::invalid_argument("zeros-mod needs n >= 1");
    std::vector<Offset> residues(static_cast<std::size_t>(param));
    std::iota(residues.begin(), residues.end(), Offset{1});
    return Pattern1D(param + 1, std::move(residues));
  }
  if (name == "diag3") return Pattern2D(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  if (name == "even-rows") return Pattern2D(1, 2, {{0, 0}});
  throw std::invalid_argument("unknown reference pattern '" + name + "'");
}

std::vector<std::string> reference_pattern_names() { return {"evens", "zeros-mod", "diag3", "even-rows"}; }

Ship2D l_triomino() { return Ship2D{{0, 0}, {1, 0}, {0, 1}}; }

Family2D l_family_180() { return Family2D{l_triomino(), l_triomino().reflected()}; }

Family2D l_family_90() { return Family2D{l_triomino(), l_triomino().rotated90()}; }

}  // namespace pierce
