#ifndef SEVERI_BIG_HPP
#define SEVERI_BIG_HPP

#include <gmpxx.h>

#include <string>

namespace severi {

// Exact arithmetic everywhere. Nothing in this project touches floating point
// for a computed value.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

// "p" for integers, "p/q" otherwise (lowest terms).
inline std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str();
}

// Always "p/q", even for integers. Used by the polynomial JSON format.
inline std::string to_fraction_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// (a)_m = a (a-1) ... (a-m+1), with (a)_0 = 1.
Integer falling_factorial(const Integer& a, unsigned m);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace severi

#endif  // SEVERI_BIG_HPP
