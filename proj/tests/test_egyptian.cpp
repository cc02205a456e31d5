#include <doctest.h>

#include <vector>

#include "unitfrac/egyptian.hpp"
#include "unitfrac/error.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/seqspec.hpp"
#include "unitfrac/unitseq.hpp"

using unitfrac::BigInt;
using unitfrac::Error;
using unitfrac::Rational;
using unitfrac::UnitSeq;

namespace {

UnitSeq seq(std::vector<long> xs) {
  std::vector<BigInt> v(xs.begin(), xs.end());
  return UnitSeq::from_denominators(std::move(v));
}

}  // namespace

TEST_SUITE("egyptian") {

TEST_CASE("greedy approximation of known targets") {
  CHECK(unitfrac::greedy_approx(Rational(1)) == seq({2, 3, 6}));
  CHECK(unitfrac::greedy_approx(Rational(19, 20)) == seq({2, 3, 9, 180}));
  CHECK(unitfrac::greedy_approx(Rational(1, 7)) == seq({7}));
  CHECK(unitfrac::greedy_approx(Rational(2, 3)) == seq({2, 6}));
  const UnitSeq wide = UnitSeq::from_denominators(
      {BigInt(25), BigInt(757), BigInt(763309), BigInt("873960180913"),
       BigInt("1527612795642093418846225")});
  CHECK(unitfrac::greedy_approx(Rational(5, 121)) == wide);
}

TEST_CASE("greedy approximation sums exactly to the target") {
  for (long p = 1; p <= 30; ++p) {
    for (long q = p; q <= 30; ++q) {
      const Rational lambda(p, q);
      const UnitSeq s = unitfrac::greedy_approx(lambda);
      CHECK(s.sum() == lambda);
      // distinctness: strictly increasing denominators
      for (std::size_t i = 2; i <= s.size(); ++i) {
        CHECK(s.denominator(i - 1) < s.denominator(i));
      }
    }
  }
}

TEST_CASE("greedy approximation rejects targets outside (0, 1]") {
  CHECK_THROWS_AS(unitfrac::greedy_approx(Rational(5, 4)), Error);
  CHECK_THROWS_AS(unitfrac::greedy_approx(Rational(0)), Error);
  CHECK_THROWS_AS(unitfrac::greedy_approx(Rational(-1, 2)), Error);
}

TEST_CASE("greedy underapproximation of 19/20") {
  const UnitSeq s = unitfrac::greedy_under(Rational(19, 20), 7);
  const std::vector<BigInt>& d = s.denominators();
  REQUIRE(d.size() == 7);
  CHECK(d[0] == 2);
  CHECK(d[1] == 3);
  CHECK(d[2] == 9);
  CHECK(d[3] == 181);
  CHECK(d[4] == 32581);
  CHECK(d[5] == 1061488981);
  CHECK(d[6] == BigInt("1126758855722929381"));
}

TEST_CASE("greedy underapproximation stays strictly below the target") {
  for (const Rational& lambda :
       {Rational(1), Rational(19, 20), Rational(10, 61), Rational(3, 7)}) {
    const UnitSeq s = unitfrac::greedy_under(lambda, 6);
    for (std::size_t i = 1; i <= s.size(); ++i) {
      CHECK(s.partial_sum(i) < lambda);
    }
  }
}

TEST_CASE("greedy underapproximation of 1 is the classic quadratic sequence") {
  CHECK(unitfrac::greedy_under(Rational(1), 5) == seq({2, 3, 7, 43, 1807}));
}

TEST_CASE("greedy step picks the unique minimal denominator") {
  const BigInt x = unitfrac::greedy_under_step(Rational(10, 61), BigInt(0));
  CHECK(x == 7);
  // 1/x < r <= 1/(x-1)
  CHECK(Rational(BigInt(1), x) < Rational(10, 61));
  CHECK(Rational(10, 61) <= Rational(BigInt(1), x - 1));
  CHECK_THROWS_AS(unitfrac::greedy_under_step(Rational(0), BigInt(1)), Error);
  CHECK_THROWS_AS(unitfrac::greedy_under_step(Rational(1, 3), BigInt(10)), Error);
}

TEST_CASE("term cap on greedy underapproximation") {
  try {
    unitfrac::greedy_under(Rational(19, 20), 25);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::cap_exceeded);
  }
  CHECK(unitfrac::greedy_under(Rational(19, 20), 25, 30).size() == 25);
}

TEST_CASE("structure decomposition of 19/20") {
  const auto d = unitfrac::decompose(Rational(19, 20));
  CHECK(d.approx_component == seq({2, 3, 9, 180}));
  CHECK(d.tail_unit_fraction == Rational(1, 180));
  CHECK(d.split_index == 4);
  CHECK(d.approx_component.sum() == Rational(19, 20));
  // the greedy underapproximation equals the approx with its last term bumped
  CHECK(unitfrac::greedy_under(Rational(19, 20), 4) == seq({2, 3, 9, 181}));
}

TEST_CASE("structure decomposition of other targets") {
  const auto d1 = unitfrac::decompose(Rational(1));
  CHECK(d1.approx_component == seq({2, 3, 6}));
  CHECK(d1.tail_unit_fraction == Rational(1, 6));
  CHECK(d1.split_index == 3);

  const auto d2 = unitfrac::decompose(Rational(2, 3));
  CHECK(d2.approx_component == seq({2, 6}));
  CHECK(d2.tail_unit_fraction == Rational(1, 6));
  CHECK(d2.split_index == 2);

  const auto d3 = unitfrac::decompose(Rational(1, 7));
  CHECK(d3.approx_component == seq({7}));
  CHECK(d3.tail_unit_fraction == Rational(1, 7));
  CHECK(d3.split_index == 1);
}

TEST_CASE("greedy underapproximation becomes a quadratic-recurrence tail") {
  const unitfrac::SeqSpec spec = unitfrac::greedy_under_spec(Rational(19, 20), 4);
  const auto idx = unitfrac::is_eventually_sylvester(spec);
  REQUIRE(idx.has_value());
  CHECK(*idx == 4);

  const unitfrac::SeqSpec one = unitfrac::greedy_under_spec(Rational(1), 2);
  const auto idx1 = unitfrac::is_eventually_sylvester(one);
  REQUIRE(idx1.has_value());
  CHECK(*idx1 == 1);
}

TEST_CASE("increasing rearrangement sorts and rejects duplicates") {
  const UnitSeq s = unitfrac::increasing_rearrangement(
      {BigInt(9), BigInt(2), BigInt(180), BigInt(3)});
  CHECK(s == seq({2, 3, 9, 180}));
  CHECK_THROWS_AS(unitfrac::increasing_rearrangement({BigInt(2), BigInt(2)}), Error);
}

TEST_CASE("product dominance implies sum dominance on hand-picked pairs") {
  // equal sequences: hypothesis and conclusion both hold
  auto d = unitfrac::product_dominance_implies_sum(seq({2, 3, 7}), seq({2, 3, 7}));
  CHECK(d.hypothesis);
  CHECK(d.conclusion);

  // prefix products of a (2, 6, 42) <= those of x (2, 8, 48)
  d = unitfrac::product_dominance_implies_sum(seq({2, 4, 6}), seq({2, 3, 7}));
  CHECK(d.hypothesis);
  CHECK(d.conclusion);

  // hypothesis fails: a's products exceed x's
  d = unitfrac::product_dominance_implies_sum(seq({2, 2, 2}), seq({3, 3, 3}));
  CHECK_FALSE(d.hypothesis);

  CHECK_THROWS_AS(
      unitfrac::product_dominance_implies_sum(seq({2, 3}), seq({2, 3, 7})), Error);
}

}  // TEST_SUITE
