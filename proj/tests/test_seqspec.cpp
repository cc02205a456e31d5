#include <doctest.h>

#include <vector>

#include "unitfrac/error.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/seqspec.hpp"

using unitfrac::Error;
using unitfrac::GreedyUnderTail;
using unitfrac::NoTail;
using unitfrac::Rational;
using unitfrac::SeqSpec;
using unitfrac::SylvesterTail;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("seqspec") {

TEST_CASE("finite spec sums its prefix") {
  const SeqSpec s(rats({2, 3, 7}), NoTail{});
  CHECK(s.is_finite());
  CHECK(s.prefix_sum() == Rational(41, 42));
  CHECK(s.total_sum() == Rational(41, 42));
  CHECK(s.term(2) == Rational(3));
  CHECK_THROWS_AS(s.term(4), Error);
}

TEST_CASE("quadratic-recurrence tail telescopes") {
  const SeqSpec s({Rational(2)}, SylvesterTail{1}, Rational(1));
  CHECK(s.has_sylvester_tail());
  CHECK(s.total_sum() == Rational(1));
  const auto terms = s.materialize(5);
  CHECK(terms == rats({2, 3, 7, 43, 1807}));
  CHECK(s.term(4) == Rational(43));

  // tail from a later index, rational terms in the prefix
  const SeqSpec c({Rational(2), Rational(4), Rational(9, 2), Rational(37)},
                  SylvesterTail{4}, Rational(1));
  CHECK(c.total_sum() == Rational(1));
  CHECK(c.term(5) == Rational(37 * 37 - 37 + 1));
}

TEST_CASE("greedy tail materializes greedy steps") {
  const SeqSpec s(rats({2, 3, 8}), GreedyUnderTail{Rational(1, 24)}, Rational(1));
  CHECK(s.has_greedy_tail());
  CHECK(s.total_sum() == Rational(1));
  const auto terms = s.materialize(5);
  REQUIRE(terms.size() == 5);
  CHECK(terms[3] == Rational(25));
  CHECK(terms[4] == Rational(601));
}

TEST_CASE("construction validation") {
  // terms below 2
  CHECK_THROWS_AS(SeqSpec(rats({1, 3}), NoTail{}), Error);
  // decreasing prefix
  CHECK_THROWS_AS(SeqSpec(rats({3, 2}), NoTail{}), Error);
  // recurrence tail starting outside the prefix
  CHECK_THROWS_AS(SeqSpec(rats({2, 3}), SylvesterTail{5}), Error);
  CHECK_THROWS_AS(SeqSpec(rats({2, 3}), SylvesterTail{0}), Error);
  // recurrence violated inside the prefix
  CHECK_THROWS_AS(SeqSpec(rats({2, 4, 7}), SylvesterTail{1}), Error);
  // greedy tail with nonpositive remaining mass
  CHECK_THROWS_AS(SeqSpec(rats({2}), GreedyUnderTail{Rational(0)}), Error);
  // declared target contradicting the exact sum
  CHECK_THROWS_AS(SeqSpec(rats({2, 3, 7}), NoTail{}, Rational(1)), Error);
  CHECK_THROWS_AS(SeqSpec({Rational(2)}, SylvesterTail{1}, Rational(1, 2)), Error);
}

TEST_CASE("materialization respects the term cap") {
  const SeqSpec s({Rational(2)}, SylvesterTail{1}, Rational(1));
  try {
    s.materialize(25);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::cap_exceeded);
  }
  CHECK(s.materialize(25, 30).size() == 25);
}

TEST_CASE("JSON round trip") {
  const SeqSpec specs[] = {
      SeqSpec(rats({2, 3, 7}), NoTail{}),
      SeqSpec({Rational(2)}, SylvesterTail{1}, Rational(1)),
      SeqSpec(rats({2, 3, 8}), GreedyUnderTail{Rational(1, 24)}, Rational(1)),
      SeqSpec({Rational(2), Rational(4), Rational(9, 2), Rational(37)},
              SylvesterTail{4}, Rational(1)),
  };
  for (const SeqSpec& s : specs) {
    const SeqSpec rt = SeqSpec::from_json(s.to_json());
    CHECK(rt.prefix() == s.prefix());
    CHECK(rt.total_sum() == s.total_sum());
    CHECK(rt.to_json() == s.to_json());
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(SeqSpec::from_json("{"), Error);
  CHECK_THROWS_AS(SeqSpec::from_json("{\"prefix\":[]}"), Error);
  CHECK_THROWS_AS(
      SeqSpec::from_json("{\"prefix\":[\"2\"],\"tail\":{\"kind\":\"what\"}}"), Error);
  CHECK_THROWS_AS(
      SeqSpec::from_json("{\"prefix\":[2],\"tail\":{\"kind\":\"none\"}}"), Error);
}

}  // TEST_SUITE
