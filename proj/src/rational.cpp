#include "mpc/rational.hpp"

#include <stdexcept>

namespace mpc {

Rat parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(BigInt(std::string(s)));
    }
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + std::string(s));
  }
}

std::string format_rational(const Rat& r) {
  BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt rat_floor(const Rat& r) {
  BigInt num = numerator(r), den = denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

}  // namespace mpc
