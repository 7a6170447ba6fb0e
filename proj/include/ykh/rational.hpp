#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ykh {

// GMP keeps mpq_class canonical (positive denominator, reduced) after every
// arithmetic operation; only direct construction from a numerator/denominator
// pair needs an explicit canonicalize().
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

/// "p/q" with the denominator always present.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

}  // namespace ykh
