#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace mpc {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" or "p"; sign on the numerator.
Rat parse_rational(std::string_view s);
std::string format_rational(const Rat& r);

// floor of a rational, exact.
BigInt rat_floor(const Rat& r);

}  // namespace mpc
