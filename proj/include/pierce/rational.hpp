#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace pierce {

/// Exact density value. Always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Renders as "p/q", including "1/1" and "0/1".
std::string to_string(const Rational& r);

/// Parses "p/q" or a bare integer. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace pierce
