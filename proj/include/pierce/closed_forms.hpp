#pragma once

#include <cstdint>
#include <optional>

#include "pierce/rational.hpp"
#include "pierce/ship.hpp"
#include "pierce/solver.hpp"
#include "pierce/verifier.hpp"

namespace pierce {

/// Density of {[0,da],[0,db]} with a, b coprime: 1/2 if a and b are both odd,
/// (a+b+1)/(2(a+b)) otherwise. Both ships must have exactly two cells.
Rational two_2ships_density(const Ship& first, const Ship& second);

/// Density of the toughest family of n two-cell ships, n/(n+1).
Rational toughest_2ships_value(std::int64_t n);
/// The family {[0,1], ..., [0,n]} attaining it.
Family toughest_2ships_family(std::int64_t n);

/// Density of the easiest family of n k-cell ships, 1/k.
Rational easiest_value(std::int64_t n, std::int64_t k);

/// Bounds on the toughest density among families of n ships with k cells each.
/// Floating point; `upper_rational_part` is the exact n/(n+1) term of the minimum.
struct BoundsReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double lower = 0.0;
  double upper = 0.0;
  /// (1 + ln(kn)) / k
  double upper_log_part = 0.0;
  Rational upper_rational_part;
  /// Set when lower <= 0 and so says nothing.
  bool lower_vacuous = false;
};

/// lower = 1 - e * n^(-1/(k-1)), reported raw; upper = min(n/(n+1), (1 + ln(kn)) / k).
/// Requires n >= 1 and k >= 2.
BoundsReport bounds_Mkn(std::int64_t n, std::int64_t k);

/// Two-cell planar ships [0,u] and [0,v]: 1/2 when u, v are linearly independent,
/// otherwise the 1D formula on u = aw, v = bw with w primitive.
Rational two_2ships_density_2d(Cell2D u, Cell2D v);

/// Outcome of classifying {S, reflected S} for S = [0,u,v] in the plane.
struct ThreeShipReflection2D {
  Rational density;
  bool independent = false;
  /// Lattice pattern {au+bv : a-b = 0 mod 3} spread over all cosets (independent case only).
  std::optional<Pattern2D> lattice_pattern;
  /// The 1D family the collinear case reduces to.
  std::optional<Family> collinear_family;
};

/// 1/3 when u, v are linearly independent; otherwise the exact 1D value from the solver.
ThreeShipReflection2D three_ship_reflection_2d(Cell2D u, Cell2D v, const SolveOptions& options = {});

/// Period-(3D, 3D) pattern, D = |det(u, v)|, that hits every translate of [0,u,v] and [0,-u,-v].
Pattern2D lattice_diagonal_pattern(Cell2D u, Cell2D v);

}  // namespace pierce
