#include "doctest.h"

#include "fvlt/polynomial.hpp"

using fvlt::Polynomial;

TEST_CASE("evaluation is Horner-exact on simple cases") {
  const Polynomial p({1.0, -2.0, 1.0});  // (u-1)^2
  CHECK(p(0.0) == 1.0);
  CHECK(p(1.0) == 0.0);
  CHECK(p(3.0) == 4.0);
  CHECK(Polynomial()(5.0) == 0.0);
  CHECK(Polynomial::constant(7.5)(123.0) == 7.5);
}

TEST_CASE("trailing zeros are normalized away") {
  const Polynomial p({1.0, 2.0, 0.0, 0.0});
  CHECK(p.degree() == 1);
  CHECK(p.coefficients().size() == 2);
  CHECK(Polynomial({0.0, 0.0}).is_zero());
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("derivative and antiderivative") {
  const Polynomial p({3.0, 0.0, 1.0, -2.0});  // 3 + u^2 - 2u^3
  const Polynomial d = p.derivative();
  CHECK(d.coefficients() == std::vector<double>{0.0, 2.0, -6.0});
  CHECK(Polynomial::constant(4.0).derivative().is_zero());

  const Polynomial a = p.antiderivative();
  CHECK(a(0.0) == 0.0);
  // derivative of the antiderivative reproduces the coefficients up to rounding
  const Polynomial round_trip = a.derivative();
  REQUIRE(round_trip.degree() == p.degree());
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    CHECK(round_trip.coefficients()[k] ==
          doctest::Approx(p.coefficients()[k]).epsilon(1e-15));
  }
}

TEST_CASE("minus, plus and scaled") {
  const Polynomial p({2.0, 1.0});
  CHECK(p.minus(2.0)(0.0) == 0.0);
  CHECK(Polynomial().minus(3.0)(10.0) == -3.0);
  const Polynomial q = p.plus(p.scaled(-1.0));
  CHECK(q.is_zero());
  CHECK(p.plus(Polynomial({0.0, 0.0, 4.0}))(2.0) == 2.0 + 2.0 + 16.0);
}
