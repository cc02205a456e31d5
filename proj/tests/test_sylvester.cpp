#include <doctest.h>

#include <thread>
#include <vector>

#include "unitfrac/error.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/sylvester.hpp"

using unitfrac::BigInt;
using unitfrac::Error;
using unitfrac::Rational;

TEST_SUITE("sylvester") {

TEST_CASE("integer seed 2 reproduces the classic sequence") {
  const auto t = unitfrac::sylvester_terms(Rational(2), 7);
  REQUIRE(t.size() == 7);
  CHECK(t[0] == Rational(2));
  CHECK(t[1] == Rational(3));
  CHECK(t[2] == Rational(7));
  CHECK(t[3] == Rational(43));
  CHECK(t[4] == Rational(1807));
  CHECK(t[5] == Rational(3263443));
  CHECK(t[6] == Rational(BigInt("10650056950807")));
}

TEST_CASE("integer seed 37") {
  const auto t = unitfrac::sylvester_terms(Rational(37), 3);
  CHECK(t == std::vector<Rational>{Rational(37), Rational(1333), Rational(1775557)});
}

TEST_CASE("rational seeds follow the same recurrence") {
  const auto t = unitfrac::sylvester_terms(Rational(9, 2), 3);
  REQUIRE(t.size() == 3);
  CHECK(t[0] == Rational(9, 2));
  CHECK(t[1] == Rational(67, 4));
  CHECK(t[2] == t[1] * t[1] - t[1] + Rational(1));
}

TEST_CASE("seeds below 2 are rejected") {
  CHECK_THROWS_AS(unitfrac::sylvester_terms(Rational(3, 2), 3), Error);
  CHECK_THROWS_AS(unitfrac::SylvesterLikeSeq(Rational(1)), Error);
  CHECK(unitfrac::sylvester_terms(Rational(2), 1).front() == Rational(2));
}

TEST_CASE("lazy sequence materializes on demand and caps") {
  unitfrac::SylvesterLikeSeq s(Rational(2), 10);
  CHECK(s.materialized() <= 1);
  CHECK(s.term(5) == Rational(1807));
  CHECK(s.materialized() >= 5);
  CHECK(s.term(2) == Rational(3));
  CHECK_THROWS_AS(s.term(11), Error);
  CHECK_THROWS_AS(s.term(0), Error);
  try {
    s.term(11);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::cap_exceeded);
  }
}

TEST_CASE("concurrent readers see consistent terms") {
  unitfrac::SylvesterLikeSeq s(Rational(2), 12);
  std::vector<Rational> a(12), b(12);
  std::thread ta([&] {
    for (std::size_t i = 1; i <= 12; ++i) a[i - 1] = s.term(i);
  });
  std::thread tb([&] {
    for (std::size_t i = 12; i >= 1; --i) b[i - 1] = s.term(i);
  });
  ta.join();
  tb.join();
  CHECK(a == b);
  CHECK(a[6] == Rational(BigInt("10650056950807")));
}

TEST_CASE("unit tails of unit fractions") {
  const auto t180 = unitfrac::unit_tail(BigInt(180), 3);
  REQUIRE(t180.size() == 3);
  CHECK(t180[0] == 181);
  CHECK(t180[1] == 32581);
  CHECK(t180[2] == 1061488981);

  const auto t43 = unitfrac::unit_tail(BigInt(43), 2);
  CHECK(t43 == std::vector<BigInt>{BigInt(44), BigInt(1893)});

  CHECK_THROWS_AS(unitfrac::unit_tail(BigInt(0), 2), Error);
}

TEST_CASE("partial sums telescope to the seed's defect") {
  // sum_{i<=k} 1/s_i + 1/(s_{k+1} - 1) = 1/(s_1 - 1) for every k
  for (std::size_t k = 1; k <= 5; ++k) {
    CHECK(unitfrac::sylvester_partial_identity(Rational(9, 2), k) == Rational(2, 7));
    CHECK(unitfrac::sylvester_partial_identity(Rational(2), k) == Rational(1));
  }
}

TEST_CASE("terms grow doubly exponentially") {
  const auto t = unitfrac::sylvester_terms(Rational(2), 9);
  for (std::size_t i = 1; i < t.size(); ++i) {
    CHECK(t[i] > t[i - 1] * t[i - 1] - t[i - 1]);
    CHECK(t[i] > t[i - 1]);
  }
}

}  // TEST_SUITE
