#include "severi/node_polynomial.hpp"

#include "severi/counting.hpp"
#include "severi/qcalc.hpp"

#include <functional>
#include <string>
#include <vector>

namespace severi {

FitValidationError::FitValidationError(int d, const std::string& message)
    : std::runtime_error(message + " (d = " + std::to_string(d) + ")"), d_(d) {}

namespace {

void check_cogenus(int cogenus, const PolynomialFitOptions& options) {
  if (cogenus < 1 || cogenus > options.max_cogenus) {
    throw std::invalid_argument("cogenus must lie in 1.." + std::to_string(options.max_cogenus));
  }
}

RationalPolynomial fit_and_validate(int first_d, int sample_count, int check_count,
                                    const std::function<Rational(int)>& value_at, const std::string& what) {
  std::vector<InterpolationPoint> points;
  for (int d = first_d; d < first_d + sample_count; ++d) points.push_back({Integer(d), value_at(d)});
  RationalPolynomial fitted = interpolate(points);
  for (int d = first_d + sample_count; d < first_d + sample_count + check_count; ++d) {
    const Rational actual = value_at(d);
    if (fitted(Rational(d)) != actual) {
      throw FitValidationError(d, what + " fit predicts " + to_string(fitted(Rational(d))) + " but the value is " +
                                      to_string(actual) + "; interpolation threshold too low");
    }
  }
  return fitted;
}

}  // namespace

RationalPolynomial node_polynomial(int cogenus, const PolynomialFitOptions& options) {
  check_cogenus(cogenus, options);
  RationalPolynomial fitted = fit_and_validate(
      cogenus + 2, 2 * cogenus + 1, 2,
      [&](int d) { return Rational(severi_degree(d, cogenus, options.jobs)); }, "node polynomial");
  if (fitted.degree() != 2 * cogenus) {
    throw FitValidationError(cogenus + 2, "node polynomial has degree " + std::to_string(fitted.degree()) +
                                              ", expected " + std::to_string(2 * cogenus));
  }
  return fitted;
}

RationalPolynomial q_polynomial(int cogenus, const PolynomialFitOptions& options) {
  check_cogenus(cogenus, options);
  return fit_and_validate(
      cogenus + 2, 3, 4, [&](int d) { return q_delta_templates(d, cogenus, options.jobs); }, "Q polynomial");
}

}  // namespace severi
