#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace equicoh {

// Exact arithmetic base types.  Every computation in the library runs over
// the rationals (or polynomial rings over them); no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline Int scalar_num(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline Int scalar_den(const Scalar& s) { return boost::multiprecision::denominator(s); }

inline Scalar scalar_abs(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / int_gcd(a, b) * b;
}

// Renders "3", "-7", "1/2", "-3/4".
inline std::string render_scalar(const Scalar& s) {
  std::string out = scalar_num(s).str();
  if (scalar_den(s) != 1) {
    out += "/";
    out += scalar_den(s).str();
  }
  return out;
}

}  // namespace equicoh
