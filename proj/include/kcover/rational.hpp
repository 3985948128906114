#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kcover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// r^e by binary exponentiation, e >= 0.
inline Rational pow_rational(Rational base, unsigned exp) {
  Rational result(1);
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

/// Canonical "num/den" form, denominator always spelled out ("0/1", "3/4").
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "num/den" or a bare integer "num". Throws std::invalid_argument.
inline Rational parse_fraction(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace kcover
