#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace biscount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(std::size_t e) { return BigInt(1) << static_cast<unsigned>(e); }

/// log2 of a nonnegative integer; -inf for zero.
inline double log2_of(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t top = boost::multiprecision::msb(x);
  if (top < 53) return std::log2(x.convert_to<double>());
  const std::size_t shift = top - 52;
  const BigInt head = x >> static_cast<unsigned>(shift);
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

inline double log2_of(const Rational& q) {
  return log2_of(boost::multiprecision::numerator(q)) - log2_of(boost::multiprecision::denominator(q));
}

/// Decimal rendering of a nonnegative rational, truncated (not rounded) to
/// `digits` significant digits. Integer digits past the limit become zeros.
inline std::string to_decimal(const Rational& q, std::size_t digits = 40) {
  if (q < 0) return "-" + to_decimal(-q, digits);
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt whole = num / den;
  BigInt rem = num % den;

  std::string int_part = whole.str();
  std::size_t significant = whole == 0 ? 0 : int_part.size();
  if (significant > digits) {
    for (std::size_t i = digits; i < int_part.size(); ++i) int_part[i] = '0';
    return int_part;
  }
  std::string frac;
  while (rem != 0 && significant < digits) {
    rem *= 10;
    const BigInt digit = rem / den;
    rem %= den;
    frac += static_cast<char>('0' + digit.convert_to<int>());
    if (significant > 0 || digit != 0) ++significant;
  }
  return frac.empty() ? int_part : int_part + "." + frac;
}

}  // namespace biscount
