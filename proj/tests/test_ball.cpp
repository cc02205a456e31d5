#include <doctest.h>

#include <vector>

#include "ball_corpus.hpp"
#include "unitfrac/ball.hpp"
#include "unitfrac/error.hpp"
#include "unitfrac/rational.hpp"

using unitfrac::Ball;
using unitfrac::BigInt;
using unitfrac::Error;
using unitfrac::Rational;

namespace {

Rational pow2(long k) {
  Rational r(1);
  if (k >= 0) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
    r = Rational(p);
  } else {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-k));
    r = Rational(BigInt(1), p);
  }
  return r;
}

}  // namespace

TEST_SUITE("ball") {

TEST_CASE("dyadic rationals are exact") {
  const Ball b = Ball::from_rational(Rational(1, 2), 64);
  CHECK(b.radius_zero());
  CHECK(b.midpoint() == Rational(1, 2));
  CHECK(Ball::from_integer(37, 64).radius_zero());
  CHECK(Ball::from_integer(-5, 16).midpoint() == Rational(-5));
}

TEST_CASE("from_rational encloses with half-ulp radius") {
  const Ball b = Ball::from_rational(Rational(1, 3), 64);
  CHECK(b.contains(Rational(1, 3)));
  CHECK(b.radius() <= pow2(-63));

  const Ball c = Ball::from_rational(Rational(19, 20), 128);
  CHECK(c.contains(Rational(19, 20)));
  CHECK(c.radius() <= pow2(-127));

  // magnitude scaling: radius bound is relative to max(1, |q|)
  const Ball d = Ball::from_rational(Rational(1000000, 3), 64);
  CHECK(d.contains(Rational(1000000, 3)));
  CHECK(d.radius() <= pow2(-63) * Rational(1000000, 3));
}

TEST_CASE("precision below the floor is rejected") {
  CHECK_THROWS_AS(Ball::from_rational(Rational(1, 3), 7), Error);
  CHECK(Ball::from_rational(Rational(1, 3), 8).contains(Rational(1, 3)));
}

TEST_CASE("from_interval spans both endpoints") {
  const Ball b = Ball::from_interval(Rational(0), Rational(1, 7), 64);
  CHECK(b.contains(Rational(0)));
  CHECK(b.contains(Rational(1, 7)));
  CHECK(b.contains(Rational(1, 14)));
  CHECK_THROWS_AS(Ball::from_interval(Rational(1), Rational(0), 64), Error);
}

TEST_CASE("field operations enclose the exact rational result") {
  const std::vector<Rational> samples = {
      Rational(1, 3),  Rational(19, 20), Rational(-7, 11), Rational(355, 113),
      Rational(1, 97), Rational(-2),     Rational(9, 2),
  };
  for (const Rational& x : samples) {
    for (const Rational& y : samples) {
      const Ball bx = Ball::from_rational(x, 64);
      const Ball by = Ball::from_rational(y, 64);
      CHECK((bx + by).contains(x + y));
      CHECK((bx - by).contains(x - y));
      CHECK((bx * by).contains(x * y));
      CHECK((bx / by).contains(x / y));
      CHECK((-bx).contains(-x));
      CHECK(recip(by).contains(y.reciprocal()));
    }
  }
}

TEST_CASE("mul_2si is exact scaling") {
  const Ball b = Ball::from_rational(Rational(5, 3), 64);
  CHECK(mul_2si(b, -7).contains(Rational(5, 3) * pow2(-7)));
  CHECK(mul_2si(b, 11).contains(Rational(5, 3) * pow2(11)));
  CHECK(mul_2si(b, 0).midpoint() == b.midpoint());
}

TEST_CASE("transcendental kernels hit known points") {
  CHECK(log(Ball::from_integer(1, 64)).contains(Rational(0)));
  CHECK(exp(Ball::from_integer(0, 64)).contains(Rational(1)));
  CHECK(log1p(Ball::from_integer(0, 64)).contains(Rational(0)));
  // e > 2.718281828 and < 2.718281829
  const Ball e = exp(Ball::from_integer(1, 128));
  CHECK(e.lower() > Rational(2718281828, 1000000000));
  CHECK(e.upper() < Rational(2718281829, 1000000000));
}

TEST_CASE("log1p(1/9) agrees with log(10/9) and refines under precision") {
  const Ball a = log1p(Ball::from_rational(Rational(1, 9), 64));
  const Ball b = log(Ball::from_rational(Rational(10, 9), 64));
  CHECK(a.overlaps(b));
  const Ball fine = log1p(Ball::from_rational(Rational(1, 9), 256));
  CHECK(fine.nested_in(a));
  CHECK(fine.radius() < a.radius());
}

TEST_CASE("domain violations throw") {
  const Ball zero_straddle = Ball::from_interval(Rational(-1, 10), Rational(1, 10), 64);
  CHECK_THROWS_AS(log(zero_straddle), Error);
  CHECK_THROWS_AS(recip(zero_straddle), Error);
  CHECK_THROWS_AS(log1p(Ball::from_integer(-1, 64)), Error);
  CHECK_THROWS_AS(Ball::from_rational(Rational(1, 2), 64) / zero_straddle, Error);
}

TEST_CASE("strictly_below demands disjoint intervals") {
  const Ball lo = Ball::from_rational(Rational(1, 3), 64);
  const Ball hi = Ball::from_rational(Rational(1, 2), 64);
  CHECK(strictly_below(lo, hi));
  CHECK_FALSE(strictly_below(hi, lo));
  CHECK_FALSE(strictly_below(lo, lo));
}

TEST_CASE("corpus chains refine under precision doubling") {
  for (const auto& entry : unitfrac_tests::ball_corpus()) {
    CAPTURE(entry.name);
    Ball coarse = entry.eval(64);
    for (mpfr_prec_t p : {128, 256, 512}) {
      const Ball fine = entry.eval(p);
      CHECK(unitfrac_tests::refined(coarse, fine));
      coarse = fine;
    }
  }
}

TEST_CASE("serialization round trips as an enclosure") {
  const Ball b =
      log(Ball::from_rational(Rational(10, 9), 128)) * Ball::from_integer(3, 128);
  const Ball rt = Ball::from_json(b.to_json());
  CHECK(rt.midpoint() == b.midpoint());
  CHECK(b.nested_in(rt));
  CHECK(rt.bits() == b.bits());

  const Ball exact = Ball::from_rational(Rational(3, 4), 64);
  const Ball rt2 = Ball::from_strings(exact.mid_string(), exact.rad_string(), 64);
  CHECK(rt2.midpoint() == Rational(3, 4));
}

TEST_CASE("malformed ball JSON is rejected") {
  CHECK_THROWS_AS(Ball::from_json("{}"), Error);
  CHECK_THROWS_AS(Ball::from_json("not json"), Error);
  CHECK_THROWS_AS(Ball::from_json("{\"mid\":\"1.0\",\"rad\":\"0\",\"bits\":4}"), Error);
}

TEST_CASE("decimal and display") {
  const Ball half = Ball::from_rational(Rational(1, 2), 64);
  CHECK(half.decimal(3) == "0.500");
  CHECK(half.display(3) == "0.500 ± 1e-3");
  const Ball neg = Ball::from_rational(Rational(-1, 3), 64);
  CHECK(neg.decimal(2) == "-0.33");

  const Ball wide = Ball::from_interval(Rational(0), Rational(1, 10), 64);
  CHECK_THROWS_AS(wide.display(6), Error);
  try {
    wide.display(6);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::verification);
  }
}

}  // TEST_SUITE
