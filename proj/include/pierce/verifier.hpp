#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/rational.hpp"
#include "pierce/ship.hpp"

namespace pierce {

/// Periodic 1D shooting pattern: cell t is shot iff (t mod period) is a residue.
class Pattern1D {
 public:
  /// Residues are sorted and deduplicated; each must lie in [0, period).
  Pattern1D(Offset period, std::vector<Offset> residues);

  [[nodiscard]] Offset period() const noexcept { return period_; }
  [[nodiscard]] const std::vector<Offset>& residues() const noexcept { return residues_; }
  [[nodiscard]] bool shot(Offset cell) const;
  [[nodiscard]] Rational density() const;

  /// The stretched pattern x'_{kd+r} = x_k; pierces dF whenever this pierces F.
  [[nodiscard]] Pattern1D stretched(Offset factor) const;

  friend bool operator==(const Pattern1D&, const Pattern1D&) = default;

 private:
  Offset period_;
  std::vector<Offset> residues_;
  std::vector<bool> mask_;
};

/// Periodic 2D pattern with period `period_x` along x and `period_y` along y.
class Pattern2D {
 public:
  Pattern2D(Offset period_x, Offset period_y, std::vector<Cell2D> residues);

  [[nodiscard]] Offset period_x() const noexcept { return px_; }
  [[nodiscard]] Offset period_y() const noexcept { return py_; }
  [[nodiscard]] const std::vector<Cell2D>& residues() const noexcept { return residues_; }
  [[nodiscard]] bool shot(Offset x, Offset y) const;
  [[nodiscard]] Rational density() const;

  friend bool operator==(const Pattern2D&, const Pattern2D&) = default;

 private:
  Offset px_;
  Offset py_;
  std::vector<Cell2D> residues_;
  std::vector<bool> mask_;
};

inline Rational pattern_density(const Pattern1D& x) { return x.density(); }
inline Rational pattern_density(const Pattern2D& x) { return x.density(); }

/// A translate that the pattern misses: ship index (into the family's canonical order)
/// and the translation.
struct Miss1D {
  std::size_t ship = 0;
  Offset shift = 0;
  friend bool operator==(const Miss1D&, const Miss1D&) = default;
};

struct Miss2D {
  std::size_t ship = 0;
  Cell2D shift;
  friend bool operator==(const Miss2D&, const Miss2D&) = default;
};

/// Checks every ship at every shift in one period. Returns the lexicographically first
/// missed (ship, shift), or nullopt if every translate is hit.
std::optional<Miss1D> verify_pattern_1d(const Pattern1D& x, const Family& f);
std::optional<Miss2D> verify_pattern_2d(const Pattern2D& x, const Family2D& f);

/// "p:r1,r2,..." (an empty residue list is allowed: "p:").
Pattern1D parse_pattern_1d(std::string_view text);
/// "p,q:(i1,j1),(i2,j2),...".
Pattern2D parse_pattern_2d(std::string_view text);
std::string to_string(const Pattern1D& x);
std::string to_string(const Pattern2D& x);

}  // namespace pierce
