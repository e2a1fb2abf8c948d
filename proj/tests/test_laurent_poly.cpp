#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"

using namespace tensorbraid;

namespace {
const LaurentPoly q = LaurentPoly::q_power(1);
const LaurentPoly q_inv2 = LaurentPoly::q_power(-2);
const LaurentPoly x = LaurentPoly::x(), y = LaurentPoly::y();
}  // namespace

TEST_CASE("addition examples") {
  CHECK((LaurentPoly(1) - q_inv2) + q_inv2 == LaurentPoly(1));
  CHECK(LaurentPoly() + x == x);
  CHECK((q + q).to_string() == "2*q");
  CHECK((q - q).is_zero());
}

TEST_CASE("multiplication examples") {
  CHECK((LaurentPoly(1) - q_inv2) * LaurentPoly::q_power(2) == LaurentPoly::q_power(2) - 1);
  CHECK(x * y == LaurentPoly::monomial({0, 1, 1, 0}));
  CHECK(LaurentPoly::q_power(-1) * q == LaurentPoly(1));
  CHECK(q_inv2.pow(-1) == LaurentPoly::q_power(2));
  CHECK((1 + q).pow(2) == 1 + 2 * q + q * q);
  CHECK_THROWS((1 + q).pow(-1));
}

TEST_CASE("evaluation examples") {
  Assignment<Rational> at;
  at.q = Rational(2);
  CHECK((LaurentPoly(1) - q_inv2).eval(at) == Rational(3, 4));

  Assignment<Rational> one;
  one.q = Rational(1);
  for (int a = 0; a < 4; ++a) {
    for (int c = 0; c < 4; ++c) CHECK(LaurentPoly::q_power(1 - a - c).eval(one) == Rational(1));
  }

  Assignment<Rational> xyq;
  xyq.x = Rational(1);
  xyq.q = Rational(3);
  xyq.y = LaurentPoly::q_power(-2).eval(xyq);
  CHECK((x - y).eval(xyq) == Rational(8, 9));

  Assignment<double> zero;
  zero.q = 0.0;
  CHECK_THROWS_AS(q_inv2.eval(zero), SingularSpecialization);
  CHECK(q.eval(zero) == 0.0);
  Assignment<double> missing;
  CHECK_THROWS_AS(x.eval(missing), std::invalid_argument);
}

TEST_CASE("text form") {
  CHECK((LaurentPoly(1) - q_inv2).to_string() == "1 - q^-2");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::monomial({-1, 2, 0, 0}, Rational(-3, 2)).to_string() == "-3/2*q^-1*x^2");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = tbtest::random_poly(rng, true), b = tbtest::random_poly(rng, true),
               c = tbtest::random_poly(rng, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(12);
  Assignment<Rational> at;
  at.q = Rational(3, 2);
  at.x = Rational(-2);
  at.y = Rational(5, 3);
  at.z = Rational(7);
  Assignment<double> atd;
  atd.q = 1.5;
  atd.x = -2.0;
  atd.y = 5.0 / 3.0;
  atd.z = 7.0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = tbtest::random_poly(rng, true), b = tbtest::random_poly(rng, true);
    CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
    CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
    CHECK((a * b).eval(atd) == doctest::Approx(a.eval(atd) * b.eval(atd)).epsilon(1e-12));
  }
}
