#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pierce {

using Offset = std::int64_t;

/// Raised for any malformed textual input (family, pattern, rational).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A 1D ship: a finite set of cells identified up to translation.
///
/// Stored normalized: offsets strictly increasing and the first offset is 0.
class Ship {
 public:
  /// Sorts and translates `raw` so that its minimum is 0.
  /// Throws std::invalid_argument on empty input or repeated cells.
  explicit Ship(std::vector<Offset> raw);
  Ship(std::initializer_list<Offset> raw) : Ship(std::vector<Offset>(raw)) {}

  [[nodiscard]] const std::vector<Offset>& offsets() const noexcept { return offsets_; }
  [[nodiscard]] std::size_t size() const noexcept { return offsets_.size(); }
  [[nodiscard]] Offset span() const noexcept { return offsets_.back() + 1; }

  /// The mirror image [-a_k, ..., -a_1], re-anchored at 0.
  [[nodiscard]] Ship reflected() const;
  /// Every offset multiplied by `factor` (factor >= 1).
  [[nodiscard]] Ship scaled(Offset factor) const;

  friend auto operator<=>(const Ship&, const Ship&) = default;
  friend bool operator==(const Ship&, const Ship&) = default;

 private:
  std::vector<Offset> offsets_;
};

/// Same as constructing a Ship; kept as a free function for symmetry with the other operations.
Ship normalize_ship(std::vector<Offset> raw);

/// A non-empty set of ships, sorted lexicographically with duplicates removed.
class Family {
 public:
  explicit Family(std::vector<Ship> ships);
  Family(std::initializer_list<Ship> ships) : Family(std::vector<Ship>(ships)) {}

  [[nodiscard]] const std::vector<Ship>& ships() const noexcept { return ships_; }
  [[nodiscard]] std::size_t size() const noexcept { return ships_.size(); }
  [[nodiscard]] const Ship& operator[](std::size_t i) const { return ships_[i]; }

  /// Maximum span over the ships.
  [[nodiscard]] Offset span() const noexcept;
  [[nodiscard]] std::size_t min_ship_size() const noexcept;
  [[nodiscard]] std::size_t max_ship_size() const noexcept;

  [[nodiscard]] Family reflected() const;
  [[nodiscard]] Family scaled(Offset factor) const;

  friend auto operator<=>(const Family&, const Family&) = default;
  friend bool operator==(const Family&, const Family&) = default;

 private:
  std::vector<Ship> ships_;
};

inline Offset span(const Ship& s) noexcept { return s.span(); }
inline Offset span(const Family& f) noexcept { return f.span(); }
inline Family reflect(const Family& f) { return f.reflected(); }

struct ScaleReduction {
  Family family;
  Offset factor = 1;
};

/// Divides every offset of every ship by the gcd of all nonzero offsets in the family.
/// The factor is 1 when the family only contains single-cell ships.
ScaleReduction scale_reduce(const Family& f);

/// Family text: ships separated by ';', offsets by ',', whitespace ignored ("0,1;0,2,4").
Family parse_family(std::string_view text);
/// Family file: one ship per line, '#' starts a comment, blank lines skipped.
Family parse_family_lines(std::string_view text);
std::string to_string(const Ship& s);
std::string to_string(const Family& f);

// ---------------------------------------------------------------------------
// Two-dimensional ships.

struct Cell2D {
  Offset x = 0;
  Offset y = 0;
  friend auto operator<=>(const Cell2D&, const Cell2D&) = default;
  friend bool operator==(const Cell2D&, const Cell2D&) = default;
};

/// A set of grid cells, translated so its lexicographically smallest cell is (0,0).
class Ship2D {
 public:
  explicit Ship2D(std::vector<Cell2D> raw);
  Ship2D(std::initializer_list<Cell2D> raw) : Ship2D(std::vector<Cell2D>(raw)) {}

  [[nodiscard]] const std::vector<Cell2D>& cells() const noexcept { return cells_; }
  [[nodiscard]] std::size_t size() const noexcept { return cells_.size(); }
  /// Point reflection through the origin, re-normalized.
  [[nodiscard]] Ship2D reflected() const;
  /// Quarter turn counter-clockwise, (x, y) -> (-y, x), re-normalized.
  [[nodiscard]] Ship2D rotated90() const;

  friend auto operator<=>(const Ship2D&, const Ship2D&) = default;
  friend bool operator==(const Ship2D&, const Ship2D&) = default;

 private:
  std::vector<Cell2D> cells_;
};

class Family2D {
 public:
  explicit Family2D(std::vector<Ship2D> ships);
  Family2D(std::initializer_list<Ship2D> ships) : Family2D(std::vector<Ship2D>(ships)) {}

  [[nodiscard]] const std::vector<Ship2D>& ships() const noexcept { return ships_; }
  [[nodiscard]] std::size_t size() const noexcept { return ships_.size(); }
  [[nodiscard]] const Ship2D& operator[](std::size_t i) const { return ships_[i]; }

 private:
  std::vector<Ship2D> ships_;
};

/// 2D family text: ships separated by ';', cells written "(x,y)" separated by ',',
/// e.g. "(0,0),(1,0),(0,1);(0,0),(1,-1),(1,0)".
Family2D parse_family_2d(std::string_view text);
std::string to_string(const Ship2D& s);
std::string to_string(const Family2D& f);

}  // namespace pierce
