#include "pierce/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace pierce {

namespace {

Offset floor_div(Offset num, Offset den) {
  Offset q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Offset floor_mod(Offset a, Offset m) {
  Offset r = a % m;
  return r < 0 ? r + m : r;
}

Offset cross(Cell2D u, Cell2D v) { return u.x * v.y - u.y * v.x; }

// Writes collinear nonzero u, v as a*w and b*w with w primitive and a > 0.
struct Collinear {
  Offset a;
  Offset b;
};

Collinear collinear_coefficients(Cell2D u, Cell2D v) {
  const Offset g = std::gcd(u.x, u.y);
  const Cell2D w{u.x / g, u.y / g};
  const Offset b = w.x != 0 ? v.x / w.x : v.y / w.y;
  return {g, b};
}

}  // namespace

Rational two_2ships_density(const Ship& first, const Ship& second) {
  if (first.size() != 2 || second.size() != 2) throw std::invalid_argument("both ships must have two cells");
  const Offset x = first.offsets()[1];
  const Offset y = second.offsets()[1];
  const Offset d = std::gcd(x, y);
  const Offset a = x / d;
  const Offset b = y / d;
  if (a % 2 == 1 && b % 2 == 1) return Rational(1, 2);
  return Rational(a + b + 1, 2 * (a + b));
}

Rational toughest_2ships_value(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return Rational(n, n + 1);
}

Family toughest_2ships_family(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Ship> ships;
  for (Offset a = 1; a <= n; ++a) ships.push_back(Ship{0, a});
  return Family(std::move(ships));
}

Rational easiest_value(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  return Rational(1, k);
}

BoundsReport bounds_Mkn(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  BoundsReport r;
  r.n = n;
  r.k = k;
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  r.lower = 1.0 - std::numbers::e * std::pow(nd, -1.0 / (kd - 1.0));
  r.lower_vacuous = r.lower <= 0.0;
  r.upper_rational_part = Rational(n, n + 1);
  r.upper_log_part = (1.0 + std::log(kd * nd)) / kd;
  r.upper = std::min(nd / (nd + 1.0), r.upper_log_part);
  return r;
}

Rational two_2ships_density_2d(Cell2D u, Cell2D v) {
  if (u == Cell2D{} || v == Cell2D{}) throw std::invalid_argument("ship vectors must be nonzero");
  if (cross(u, v) != 0) return Rational(1, 2);
  const auto [a, b] = collinear_coefficients(u, v);
  // Reflecting a two-cell ship gives the same ship, so only |a| and |b| matter.
  return two_2ships_density(Ship{0, a}, Ship{0, b < 0 ? -b : b});
}

Pattern2D lattice_diagonal_pattern(Cell2D u, Cell2D v) {
  const Offset det = cross(u, v);
  if (det == 0) throw std::invalid_argument("vectors must be linearly independent");
  const Offset period = 3 * (det < 0 ? -det : det);
  std::vector<Cell2D> residues;
  for (Offset x = 0; x < period; ++x) {
    for (Offset y = 0; y < period; ++y) {
      // (x, y) = alpha*u + beta*v; the coset of the lattice is fixed by the fractional parts.
      const Offset alpha = floor_div(x * v.y - y * v.x, det);
      const Offset beta = floor_div(u.x * y - u.y * x, det);
      if (floor_mod(alpha - beta, 3) == 0) residues.push_back({x, y});
    }
  }
  return Pattern2D(period, period, std::move(residues));
}

ThreeShipReflection2D three_ship_reflection_2d(Cell2D u, Cell2D v, const SolveOptions& options) {
  if (u == Cell2D{} || v == Cell2D{}) throw std::invalid_argument("ship vectors must be nonzero");
  if (u == v) throw std::invalid_argument("ship cells must be distinct");
  ThreeShipReflection2D out;
  if (cross(u, v) != 0) {
    out.density = Rational(1, 3);
    out.independent = true;
    out.lattice_pattern = lattice_diagonal_pattern(u, v);
    return out;
  }
  const auto [a, b] = collinear_coefficients(u, v);
  const Ship ship{0, a, b};
  out.collinear_family = Family{ship, ship.reflected()};
  out.density = exact_density(*out.collinear_family, options).density;
  return out;
}

}  // namespace pierce
