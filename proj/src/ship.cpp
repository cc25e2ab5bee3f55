#include "pierce/ship.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "pierce/rational.hpp"

namespace pierce {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Offset parse_offset(std::string_view token) {
  Offset value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("invalid offset '" + std::string(token) + "'");
  }
  return value;
}

Ship parse_ship(std::string_view token) {
  if (token.empty()) throw ParseError("empty ship");
  std::vector<Offset> raw;
  for (auto part : split(token, ',')) raw.push_back(parse_offset(part));
  try {
    return Ship(std::move(raw));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in ship '" + std::string(token) + "'");
  }
}

template <class T>
std::string join(const std::vector<T>& items, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) os << sep;
    os << to_string(items[i]);
  }
  return os.str();
}

}  // namespace

Ship::Ship(std::vector<Offset> raw) : offsets_(std::move(raw)) {
  if (offsets_.empty()) throw std::invalid_argument("ship must contain at least one cell");
  std::sort(offsets_.begin(), offsets_.end());
  if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end()) {
    throw std::invalid_argument("duplicate offset");
  }
  const Offset base = offsets_.front();
  for (auto& o : offsets_) o -= base;
}

Ship Ship::reflected() const {
  std::vector<Offset> raw(offsets_.size());
  std::transform(offsets_.begin(), offsets_.end(), raw.begin(), [](Offset o) { return -o; });
  return Ship(std::move(raw));
}

Ship Ship::scaled(Offset factor) const {
  if (factor < 1) throw std::invalid_argument("scale factor must be positive");
  std::vector<Offset> raw(offsets_);
  for (auto& o : raw) o *= factor;
  return Ship(std::move(raw));
}

Ship normalize_ship(std::vector<Offset> raw) { return Ship(std::move(raw)); }

Family::Family(std::vector<Ship> ships) : ships_(std::move(ships)) {
  if (ships_.empty()) throw std::invalid_argument("family must contain at least one ship");
  std::sort(ships_.begin(), ships_.end());
  ships_.erase(std::unique(ships_.begin(), ships_.end()), ships_.end());
}

Offset Family::span() const noexcept {
  Offset s = 0;
  for (const auto& ship : ships_) s = std::max(s, ship.span());
  return s;
}

std::size_t Family::min_ship_size() const noexcept {
  std::size_t k = ships_.front().size();
  for (const auto& ship : ships_) k = std::min(k, ship.size());
  return k;
}

std::size_t Family::max_ship_size() const noexcept {
  std::size_t k = 0;
  for (const auto& ship : ships_) k = std::max(k, ship.size());
  return k;
}

Family Family::reflected() const {
  std::vector<Ship> out;
  out.reserve(ships_.size());
  for (const auto& s : ships_) out.push_back(s.reflected());
  return Family(std::move(out));
}

Family Family::scaled(Offset factor) const {
  std::vector<Ship> out;
  out.reserve(ships_.size());
  for (const auto& s : ships_) out.push_back(s.scaled(factor));
  return Family(std::move(out));
}

ScaleReduction scale_reduce(const Family& f) {
  Offset g = 0;
  for (const auto& s : f.ships()) {
    for (Offset o : s.offsets()) g = std::gcd(g, o);
  }
  if (g <= 1) return {f, 1};
  std::vector<Ship> out;
  out.reserve(f.size());
  for (const auto& s : f.ships()) {
    std::vector<Offset> raw(s.offsets());
    for (auto& o : raw) o /= g;
    out.emplace_back(std::move(raw));
  }
  return {Family(std::move(out)), g};
}

Family parse_family(std::string_view text) {
  const std::string compact = strip_spaces(text);
  if (compact.empty()) throw ParseError("empty family");
  std::vector<Ship> ships;
  for (auto token : split(compact, ';')) {
    if (token.empty()) continue;  // tolerate a trailing ';'
    ships.push_back(parse_ship(token));
  }
  if (ships.empty()) throw ParseError("empty family");
  return Family(std::move(ships));
}

Family parse_family_lines(std::string_view text) {
  std::vector<Ship> ships;
  for (auto line : split(text, '\n')) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string compact = strip_spaces(line);
    if (compact.empty()) continue;
    ships.push_back(parse_ship(compact));
  }
  if (ships.empty()) throw ParseError("family file contains no ships");
  return Family(std::move(ships));
}

std::string to_string(const Ship& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s.offsets()[i];
  }
  return os.str();
}

std::string to_string(const Family& f) { return join(f.ships(), ";"); }

// ---------------------------------------------------------------------------

Ship2D::Ship2D(std::vector<Cell2D> raw) : cells_(std::move(raw)) {
  if (cells_.empty()) throw std::invalid_argument("ship must contain at least one cell");
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw std::invalid_argument("duplicate cell");
  }
  const Cell2D anchor = cells_.front();
  for (auto& c : cells_) {
    c.x -= anchor.x;
    c.y -= anchor.y;
  }
}

Ship2D Ship2D::reflected() const {
  std::vector<Cell2D> raw;
  raw.reserve(cells_.size());
  for (const auto& c : cells_) raw.push_back({-c.x, -c.y});
  return Ship2D(std::move(raw));
}

Ship2D Ship2D::rotated90() const {
  std::vector<Cell2D> raw;
  raw.reserve(cells_.size());
  for (const auto& c : cells_) raw.push_back({-c.y, c.x});
  return Ship2D(std::move(raw));
}

Family2D::Family2D(std::vector<Ship2D> ships) : ships_(std::move(ships)) {
  if (ships_.empty()) throw std::invalid_argument("family must contain at least one ship");
}

Family2D parse_family_2d(std::string_view text) {
  const std::string compact = strip_spaces(text);
  std::vector<Ship2D> ships;
  for (auto token : split(compact, ';')) {
    if (token.empty()) continue;
    std::vector<Cell2D> cells;
    std::size_t pos = 0;
    while (pos < token.size()) {
      if (token[pos] != '(') throw ParseError("expected '(' in 2D ship '" + std::string(token) + "'");
      const std::size_t close = token.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated cell in '" + std::string(token) + "'");
      auto coords = split(token.substr(pos + 1, close - pos - 1), ',');
      if (coords.size() != 2) throw ParseError("a 2D cell needs exactly two coordinates");
      cells.push_back({parse_offset(coords[0]), parse_offset(coords[1])});
      pos = close + 1;
      if (pos < token.size()) {
        if (token[pos] != ',') throw ParseError("expected ',' between cells");
        ++pos;
      }
    }
    try {
      ships.emplace_back(std::move(cells));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " in ship '" + std::string(token) + "'");
    }
  }
  if (ships.empty()) throw ParseError("empty 2D family");
  return Family2D(std::move(ships));
}

std::string to_string(const Ship2D& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << '(' << s.cells()[i].x << ',' << s.cells()[i].y << ')';
  }
  return os.str();
}

std::string to_string(const Family2D& f) { return join(f.ships(), ";"); }

// ---------------------------------------------------------------------------

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  const std::string compact = strip_spaces(text);
  const auto slash = compact.find('/');
  try {
    if (slash == std::string::npos) return Rational(parse_offset(compact));
    const Offset num = parse_offset(std::string_view(compact).substr(0, slash));
    const Offset den = parse_offset(std::string_view(compact).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    return Rational(num, den);
  } catch (const ParseError& e) {
    throw std::invalid_argument("invalid rational '" + text + "': " + e.what());
  }
}

}  // namespace pierce
