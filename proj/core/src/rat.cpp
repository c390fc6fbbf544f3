#include "cubeprop/rat.hpp"

#include <cctype>

#include "cubeprop/error.hpp"

namespace cubeprop {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("empty integer in '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rat value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(body.substr(0, slash), text);
    const Integer den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rat(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = body.substr(dot + 1);
    const Integer whole = dot == 0 ? Integer(0) : parse_integer(body.substr(0, dot), text);
    const Integer part = parse_integer(frac, text);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rat(whole * scale + part, scale);
  } else {
    value = Rat(parse_integer(body, text));
  }
  return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace cubeprop
