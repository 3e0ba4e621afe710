#include "severi/node_polynomial.hpp"

#include "severi/counting.hpp"
#include "severi/qcalc.hpp"

#include <gtest/gtest.h>

namespace severi {
namespace {

TEST(NodePolynomial, Classical) {
  EXPECT_EQ(node_polynomial(1), RationalPolynomial({3, -6, 3}));
  EXPECT_EQ(node_polynomial(2), RationalPolynomial({-33, Rational(81, 2), 6, -18, Rational(9, 2)}));
  EXPECT_EQ(node_polynomial(3), RationalPolynomial({525, Rational(-829, 2), -229, Rational(423, 2), Rational(9, 2),
                                                    -27, Rational(9, 2)}));
}

TEST(NodePolynomial, DegreeAndValues) {
  for (int delta = 1; delta <= 3; ++delta) {
    const RationalPolynomial p = node_polynomial(delta, {4, 2});
    EXPECT_EQ(p.degree(), 2 * delta);
    for (int d = delta + 2; d <= delta + 12; ++d) EXPECT_EQ(p(d), severi_degree(d, delta)) << delta << " " << d;
  }
}

TEST(NodePolynomial, Guard) {
  EXPECT_THROW(node_polynomial(0), std::invalid_argument);
  EXPECT_THROW(node_polynomial(5), std::invalid_argument);
}

TEST(QPolynomial, Quadratic) {
  EXPECT_EQ(q_polynomial(1), RationalPolynomial({3, -6, 3}));
  EXPECT_EQ(q_polynomial(2), RationalPolynomial({Rational(-75, 2), Rational(117, 2), -21}));
  EXPECT_EQ(q_polynomial(3), RationalPolynomial({633, -788, 230}));
  for (int delta = 1; delta <= 3; ++delta) {
    const RationalPolynomial q = q_polynomial(delta);
    EXPECT_LE(q.degree(), 2);
    for (int d = delta + 2; d <= delta + 10; ++d) EXPECT_EQ(q(d), q_delta_templates(d, delta));
  }
}

}  // namespace
}  // namespace severi
