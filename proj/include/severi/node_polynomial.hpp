#ifndef SEVERI_NODE_POLYNOMIAL_HPP
#define SEVERI_NODE_POLYNOMIAL_HPP

#include "severi/polynomial.hpp"

#include <stdexcept>

namespace severi {

struct PolynomialFitOptions {
  int max_cogenus = 4;
  int jobs = 1;
};

// Raised when a fitted polynomial disagrees with a freshly computed value.
class FitValidationError : public std::runtime_error {
 public:
  FitValidationError(int d, const std::string& message);
  int d() const { return d_; }

 private:
  int d_;
};

// N_delta(d): interpolates severi_degree at d = delta+2 .. 3 delta+2 and checks
// two further points. Degree must come out as exactly 2 delta.
RationalPolynomial node_polynomial(int cogenus, const PolynomialFitOptions& options = {});

// Quadratic through q_delta_templates at d = delta+2 .. delta+4, checked at
// delta+5 .. delta+8.
RationalPolynomial q_polynomial(int cogenus, const PolynomialFitOptions& options = {});

}  // namespace severi

#endif  // SEVERI_NODE_POLYNOMIAL_HPP
