#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace cliquetop {

// Exact arithmetic for density invariants. Counts at desk scale stay far
// below 2^63, so a 64-bit rational never overflows here.
using Rational = boost::rational<long long>;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace cliquetop
