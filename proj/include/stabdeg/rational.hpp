#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace stabdeg {

using Rational = boost::rational<std::int64_t>;

/// Parses "7", "-3/4" or a plain decimal "1.0001" exactly. Exponents, inf and nan are refused.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& r);

}  // namespace stabdeg
