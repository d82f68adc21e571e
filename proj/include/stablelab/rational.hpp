#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace stablelab {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational with arbitrary-precision numerator and denominator, always reduced.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "a", "a/b" and "-a/b".
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace stablelab
