#include "severi/big.hpp"

#include <regex>
#include <stdexcept>

namespace severi {

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer falling_factorial(const Integer& a, unsigned m) {
  Integer result = 1;
  for (unsigned j = 0; j < m; ++j) result *= a - j;
  return result;
}

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, kPattern)) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  Rational value(text);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  value.canonicalize();
  return value;
}

}  // namespace severi
