#include "pierce/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace pierce {

namespace {

Offset floor_mod(Offset a, Offset m) {
  Offset r = a % m;
  return r < 0 ? r + m : r;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Offset parse_int(std::string_view token, const char* what) {
  Offset value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Pattern1D::Pattern1D(Offset period, std::vector<Offset> residues)
    : period_(period), residues_(std::move(residues)) {
  if (period_ < 1) throw std::invalid_argument("pattern period must be positive");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  mask_.assign(static_cast<std::size_t>(period_), false);
  for (Offset r : residues_) {
    if (r < 0 || r >= period_) throw std::invalid_argument("residue outside [0, period)");
    mask_[static_cast<std::size_t>(r)] = true;
  }
}

bool Pattern1D::shot(Offset cell) const { return mask_[static_cast<std::size_t>(floor_mod(cell, period_))]; }

Rational Pattern1D::density() const { return Rational(static_cast<Offset>(residues_.size()), period_); }

Pattern1D Pattern1D::stretched(Offset factor) const {
  if (factor < 1) throw std::invalid_argument("stretch factor must be positive");
  std::vector<Offset> out;
  out.reserve(residues_.size() * static_cast<std::size_t>(factor));
  for (Offset r : residues_) {
    for (Offset j = 0; j < factor; ++j) out.push_back(r * factor + j);
  }
  return Pattern1D(period_ * factor, std::move(out));
}

Pattern2D::Pattern2D(Offset period_x, Offset period_y, std::vector<Cell2D> residues)
    : px_(period_x), py_(period_y), residues_(std::move(residues)) {
  if (px_ < 1 || py_ < 1) throw std::invalid_argument("pattern periods must be positive");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  mask_.assign(static_cast<std::size_t>(px_ * py_), false);
  for (const auto& c : residues_) {
    if (c.x < 0 || c.x >= px_ || c.y < 0 || c.y >= py_) {
      throw std::invalid_argument("residue outside the fundamental domain");
    }
    mask_[static_cast<std::size_t>(c.x * py_ + c.y)] = true;
  }
}

bool Pattern2D::shot(Offset x, Offset y) const {
  return mask_[static_cast<std::size_t>(floor_mod(x, px_) * py_ + floor_mod(y, py_))];
}

Rational Pattern2D::density() const { return Rational(static_cast<Offset>(residues_.size()), px_ * py_); }

std::optional<Miss1D> verify_pattern_1d(const Pattern1D& x, const Family& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& offsets = f[i].offsets();
    for (Offset n = 0; n < x.period(); ++n) {
      const bool hit = std::any_of(offsets.begin(), offsets.end(), [&](Offset a) { return x.shot(n + a); });
      if (!hit) return Miss1D{i, n};
    }
  }
  return std::nullopt;
}

std::optional<Miss2D> verify_pattern_2d(const Pattern2D& x, const Family2D& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& cells = f[i].cells();
    for (Offset n = 0; n < x.period_x(); ++n) {
      for (Offset m = 0; m < x.period_y(); ++m) {
        const bool hit = std::any_of(cells.begin(), cells.end(),
                                     [&](const Cell2D& c) { return x.shot(n + c.x, m + c.y); });
        if (!hit) return Miss2D{i, {n, m}};
      }
    }
  }
  return std::nullopt;
}

Pattern1D parse_pattern_1d(std::string_view text) {
  const std::string compact = strip_spaces(text);
  const auto colon = compact.find(':');
  if (colon == std::string::npos) throw ParseError("pattern must look like 'p:r1,r2,...'");
  const std::string_view body(compact);
  const Offset period = parse_int(body.substr(0, colon), "period");
  std::vector<Offset> residues;
  std::string_view rest = body.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    residues.push_back(parse_int(rest.substr(0, comma), "residue"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  try {
    return Pattern1D(period, std::move(residues));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Pattern2D parse_pattern_2d(std::string_view text) {
  const std::string compact = strip_spaces(text);
  const auto colon = compact.find(':');
  if (colon == std::string::npos) throw ParseError("2D pattern must look like 'p,q:(i,j),...'");
  const std::string_view head = std::string_view(compact).substr(0, colon);
  const auto comma = head.find(',');
  if (comma == std::string_view::npos) throw ParseError("2D pattern needs two periods");
  const Offset px = parse_int(head.substr(0, comma), "period");
  const Offset py = parse_int(head.substr(comma + 1), "period");
  std::vector<Cell2D> residues;
  std::string_view rest = std::string_view(compact).substr(colon + 1);
  while (!rest.empty()) {
    const auto close = rest.find(')');
    if (rest.front() != '(' || close == std::string_view::npos) {
      throw ParseError("malformed cell list in 2D pattern");
    }
    const auto inner = rest.substr(1, close - 1);
    const auto sep = inner.find(',');
    if (sep == std::string_view::npos) throw ParseError("a 2D residue needs two coordinates");
    residues.push_back({parse_int(inner.substr(0, sep), "residue"), parse_int(inner.substr(sep + 1), "residue")});
    rest = rest.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != ',') throw ParseError("expected ',' between residues");
      rest = rest.substr(1);
    }
  }
  try {
    return Pattern2D(px, py, std::move(residues));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Pattern1D& x) {
  std::ostringstream os;
  os << x.period() << ':';
  for (std::size_t i = 0; i < x.residues().size(); ++i) {
    if (i) os << ',';
    os << x.residues()[i];
  }
  return os.str();
}

std::string to_string(const Pattern2D& x) {
  std::ostringstream os;
  os << x.period_x() << ',' << x.period_y() << ':';
  for (std::size_t i = 0; i < x.residues().size(); ++i) {
    if (i) os << ',';
    os << '(' << x.residues()[i].x << ',' << x.residues()[i].y << ')';
  }
  return os.str();
}

}  // namespace pierce
