#ifndef SEVERI_POLYNOMIAL_HPP
#define SEVERI_POLYNOMIAL_HPP

#include "severi/big.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace severi {

// Dense polynomial over the rationals, constant term first. No trailing zero
// coefficients are ever stored, so equality is coefficient equality.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  static RationalPolynomial constant(const Rational& c);
  // x - root
  static RationalPolynomial linear_factor(const Rational& root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Rational coefficient(int power) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }

  // Formal derivative.
  RationalPolynomial derivative() const;

  bool operator==(const RationalPolynomial& other) const { return coefficients_ == other.coefficients_; }

  // Expanded form, highest power first, e.g. "(9/2)d^4 - 9d^3 + 3".
  std::string to_string(const std::string& variable = "d") const;

  // Pulls out the rational content and integer roots, e.g.
  // "(3/2)(d - 1)(d - 2)(3d^2 - 3d - 11)". Returns the expanded form when no
  // linear factor exists.
  std::string factored_string(const std::string& variable = "d") const;

  // Coefficients as "p/q" strings, constant term first.
  std::vector<std::string> coefficient_strings() const;
  static RationalPolynomial from_coefficient_strings(std::span<const std::string> strings);
  // JSON array of coefficient strings.
  std::string to_json() const;
  static RationalPolynomial from_json(const std::string& json);

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

struct InterpolationPoint {
  Integer x;
  Rational y;
};

// Unique polynomial of degree < points.size() through all points. Throws
// std::invalid_argument on duplicate abscissae.
RationalPolynomial interpolate(std::span<const InterpolationPoint> points);

// Smallest m whose (m+1)-st differences all vanish. Needs at least 2 values
// sampled at consecutive integers; returns values.size() - 1 when no lower
// order can be certified.
int finite_difference_degree(std::span<const Rational> values);

// k-th forward differences of the sequence.
std::vector<Rational> forward_differences(std::span<const Rational> values, int order);

// Truncated formal power series. series_log needs a[0] = 1, series_exp
// needs q[0] = 0; both keep the input length.
std::vector<Rational> series_log(std::span<const Rational> a);
std::vector<Rational> series_exp(std::span<const Rational> q);

}  // namespace severi

#endif  // SEVERI_POLYNOMIAL_HPP
