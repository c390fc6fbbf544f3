#pragma once

// Exact rationals. Backed by boost::multiprecision::cpp_rational, which keeps
// values normalized (positive denominator, coprime parts).

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubeprop {

using Integer = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" and finite decimals such as "-1.41". Throws ParseError.
Rat parse_rat(std::string_view text);
// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& q);

}  // namespace cubeprop
