#include <doctest.h>

#include <vector>

#include "unitfrac/construct.hpp"
#include "unitfrac/error.hpp"
#include "unitfrac/limits.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/seqspec.hpp"

using unitfrac::Error;
using unitfrac::Rational;
using unitfrac::SeqSpec;

namespace {

SeqSpec competitor_238() {
  return SeqSpec({Rational(2), Rational(3), Rational(8)},
                 unitfrac::GreedyUnderTail{Rational(1, 24)}, Rational(1));
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("divergence index of hand-built competitors") {
  CHECK(unitfrac::find_divergence_m(competitor_238()) == 3);
  CHECK(unitfrac::find_divergence_m(unitfrac::inflated_competitor(1, 1)) == 1);
  CHECK(unitfrac::find_divergence_m(unitfrac::inflated_competitor(4, 2)) == 4);
  CHECK(unitfrac::find_divergence_m(unitfrac::inflated_competitor(7, 5)) == 7);
}

TEST_CASE("divergence needs total mass one and an eventual overshoot") {
  // total below 1
  const SeqSpec short_spec({Rational(2), Rational(4)}, unitfrac::NoTail{});
  CHECK_THROWS_AS(unitfrac::find_divergence_m(short_spec), Error);
  // never diverges from the baseline within the cap
  try {
    unitfrac::find_divergence_m(unitfrac::sylvester_growth_spec());
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::cap_exceeded);
  }
  // an undercut of the baseline (6 < 7 at index 3) leaves no room: the mass
  // is already spent, so no competitor continues past it
  const SeqSpec undercut({Rational(2), Rational(3), Rational(6)},
                         unitfrac::NoTail{}, Rational(1));
  CHECK_THROWS_AS(unitfrac::find_divergence_m(undercut), Error);
}

TEST_CASE("comparison sequence for the [2,3,8] competitor") {
  const unitfrac::ConstructionResult r = unitfrac::build_c(competitor_238());
  CHECK(r.divergence_m == 3);
  CHECK(r.remainder_unit_fraction == Rational(1, 1384152));
  CHECK(r.claims.claim1_ok);
  CHECK(r.claims.claim2_ok);
  const auto& pre = r.c_spec.prefix();
  REQUIRE(pre.size() == 6);
  CHECK(pre[0] == Rational(2));
  CHECK(pre[1] == Rational(3));
  CHECK(pre[2] == Rational(8));
  CHECK(pre[3] == Rational(49, 2));
  CHECK(pre[4] == Rational(1177));
  CHECK(pre[5] == Rational(1384153));
  CHECK(r.c_spec.total_sum() == Rational(1));
}

TEST_CASE("comparison sequence when the divergence is at the first term") {
  const unitfrac::ConstructionResult r =
      unitfrac::build_c(unitfrac::inflated_competitor(1, 1));
  CHECK(r.divergence_m == 1);
  CHECK(r.remainder_unit_fraction == Rational(1, 36));
  const auto& pre = r.c_spec.prefix();
  REQUIRE(pre.size() == 4);
  CHECK(pre[0] == Rational(2));
  CHECK(pre[1] == Rational(4));
  CHECK(pre[2] == Rational(9, 2));
  CHECK(pre[3] == Rational(37));
  CHECK(r.c_spec.total_sum() == Rational(1));
}

TEST_CASE("window claims hold for every reachable index") {
  for (std::size_t m = 1; m <= 10; ++m) {
    CHECK(unitfrac::verify_claim1(m));
    CHECK(unitfrac::verify_claim2(m));
  }
  CHECK(unitfrac::claim1_remainder(1) == Rational(1, 36));
  CHECK(unitfrac::claim1_remainder(2) == Rational(1, 1332));
  CHECK(unitfrac::claim1_remainder(3) == Rational(1, 1384152));
  CHECK(unitfrac::claim1_remainder(4) ==
        Rational(unitfrac::BigInt(1), unitfrac::BigInt("2918891951052")));
}

TEST_CASE("claim cap and invalid indices") {
  CHECK_THROWS_AS(unitfrac::verify_claim1(0), Error);
  try {
    unitfrac::verify_claim1(11);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::cap_exceeded);
  }
  unitfrac::ConstructCaps caps;
  caps.claim_cap = 12;
  CHECK(unitfrac::verify_claim1(11, caps));
}

TEST_CASE("window gap function: difference and closed form agree") {
  CHECK(unitfrac::F_difference(Rational(2)) == Rational(0));
  CHECK(unitfrac::F_closed_form(Rational(2)) == Rational(0));
  CHECK(unitfrac::F_difference(Rational(3)) == Rational(79, 400932));
  CHECK(unitfrac::F_closed_form(Rational(3)) == Rational(79, 400932));
  for (long n = -20; n <= 20; ++n) {
    for (long d = 1; d <= 4; ++d) {
      const Rational x(n, d);
      if (x == Rational(0) || x == Rational(-1)) continue;
      CHECK(unitfrac::F_difference(x) == unitfrac::F_closed_form(x));
    }
  }
  CHECK_THROWS_AS(unitfrac::F_difference(Rational(0)), Error);
  CHECK_THROWS_AS(unitfrac::F_difference(Rational(-1)), Error);
  CHECK_THROWS_AS(unitfrac::F_closed_form(Rational(0)), Error);
}

TEST_CASE("the identity check demands twelve distinct points") {
  std::vector<Rational> pts;
  for (long k = 2; k <= 13; ++k) pts.emplace_back(k);
  CHECK(unitfrac::verify_F_identity(pts));
  pts.pop_back();
  CHECK_THROWS_AS(unitfrac::verify_F_identity(pts), Error);
  // duplicates collapse
  pts.push_back(Rational(2));
  CHECK_THROWS_AS(unitfrac::verify_F_identity(pts), Error);
}

TEST_CASE("partial sums never overtake the comparison sequence") {
  const SeqSpec a = competitor_238();
  const unitfrac::ConstructionResult r = unitfrac::build_c(a);
  for (std::size_t k = r.divergence_m; k <= 12; ++k) {
    CHECK(unitfrac::lemma31_check(a, r, k));
  }
  CHECK_THROWS_AS(unitfrac::lemma31_check(a, r, r.divergence_m - 1), Error);
}

TEST_CASE("inflated competitors are well formed") {
  const SeqSpec a = unitfrac::inflated_competitor(3, 2);
  CHECK(a.total_sum() == Rational(1));
  const auto& pre = a.prefix();
  REQUIRE(pre.size() == 3);
  CHECK(pre[0] == Rational(2));
  CHECK(pre[1] == Rational(3));
  CHECK(pre[2] == Rational(9));  // u_3 + 2
  CHECK_THROWS_AS(unitfrac::inflated_competitor(0, 1), Error);
  CHECK_THROWS_AS(unitfrac::inflated_competitor(3, 0), Error);
}

TEST_CASE("the competitor family is large and diverse") {
  const auto family = unitfrac::competitor_family();
  CHECK(family.size() >= 20);
  for (const SeqSpec& a : family) {
    CHECK(a.total_sum() == Rational(1));
  }
  // spot-check a couple of members end to end
  const auto r0 = unitfrac::build_c(family.front());
  CHECK(r0.claims.claim1_ok);
  CHECK(r0.claims.claim2_ok);
  const auto r1 = unitfrac::build_c(family.back());
  CHECK(r1.claims.claim1_ok);
  CHECK(r1.claims.claim2_ok);
}

}  // TEST_SUITE
