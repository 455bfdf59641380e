#include "stabdeg/rational.hpp"

#include <charconv>

#include "stabdeg/errors.hpp"

namespace stabdeg {

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("invalid exact number '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || body.find_first_not_of("0123456789.") != std::string_view::npos)
    throw ParseError("invalid exact number '" + std::string(text) + "'");
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) {
    const std::int64_t v = parse_int(body, text);
    return Rational(negative ? -v : v);
  }
  const std::string_view int_part = body.substr(0, dot);
  const std::string_view frac_part = body.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 15) throw ParseError("invalid exact number '" + std::string(text) + "'");
  const std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, text);
  const std::int64_t fp = parse_int(frac_part, text);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  Rational r(ip * scale + fp, scale);
  return negative ? -r : r;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace stabdeg
