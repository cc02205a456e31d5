#pragma once

#include <cstddef>
#include <vector>

#include "unitfrac/caps.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/seqspec.hpp"

namespace unitfrac {

struct ConstructCaps {
  std::size_t term_cap = kDefaultTermCap;
  // Window-claim verification squares u_m twice, so it gets its own cap.
  std::size_t claim_cap = kDefaultClaimCap;
};

struct ClaimChecks {
  bool claim1_ok = false;
  bool claim2_ok = false;
};

// Comparison sequence built from a competitor: matches the competitor's
// Sylvester-agreeing prefix, patches a three-term rational window at the
// divergence index m, and closes with the Sylvester-style expansion of the
// exact unit-fraction remainder.
struct ConstructionResult {
  std::size_t divergence_m = 0;
  SeqSpec c_spec;
  Rational remainder_unit_fraction;
  ClaimChecks claims;
};

// Least m with a_i = u_i for i < m and a_m > u_m, where u is the Sylvester
// sequence. The competitor must be strictly increasing, integral, and sum to
// exactly 1; a_i < u_i would force the total past 1 and is rejected.
std::size_t find_divergence_m(const SeqSpec& a, const ConstructCaps& caps = {});

// The full construction. The window c_m..c_{m+2}:
//   m = 1:  c_m = u_m,     c_{m+1} = u_m^2,    c_{m+2} = (u_m^3(u_m-1)+1)/2
//   m > 1:  c_m = u_m + 1, c_{m+1} = u_m^2/2,  c_{m+2} = (u_m^2(u_m^2-1)+2)/2
// The leftover 1/(u_m-1) - 1/c_m - 1/c_{m+1} - 1/c_{m+2} is a unit fraction
// 1/D; the sequence continues with c_{m+3} = D + 1 and the recurrence.
ConstructionResult build_c(const SeqSpec& a, const ConstructCaps& caps = {});

// Exact check that the window leftover is the unit fraction
// 1/((u_m-1) c_m c_{m+1} c_{m+2}), cross-checked against the closed form
// 4/(u_m^2(u_m^2-1)(u_m^2(u_m^2-1)+2)) for m > 1.
bool verify_claim1(std::size_t m, const ConstructCaps& caps = {});
Rational claim1_remainder(std::size_t m, const ConstructCaps& caps = {});

// Exact strict inequality sum_{i<=m+2} 1/c_i < sum_{i<=m+2} 1/u_i; for m > 1
// the gap is also computed through F's closed form and both routes must agree
// and be positive.
bool verify_claim2(std::size_t m, const ConstructCaps& caps = {});

// The window gap as a function of x = u_m (m > 1), two ways: the defining
// six-fraction difference, and the factored closed form
//   (x-2)(3x^4-4x^3+3x^2-2x+2)
//   / (x^2 (x+1) (x^2-x+1) (x^4-x^2+2) (x^4-2x^3+2x^2-x+1)).
// Both quartic factors are positive for every real x, so the only poles are
// x = 0 and x = -1.
Rational F_difference(const Rational& x);
Rational F_closed_form(const Rational& x);

// Equality of the two routes at every sample point. The cross-multiplied
// difference is a polynomial of degree <= 11, so 12 distinct points pin it;
// fewer than 12 distinct points is an error.
bool verify_F_identity(const std::vector<Rational>& sample_points);

// Exact partial-sum domination sum_{i<=k} 1/a_i <= sum_{i<=k} 1/c_i, k >= m.
bool lemma31_check(const SeqSpec& a, const ConstructionResult& c,
                   std::size_t k, const ConstructCaps& caps = {});

// Competitor generator: Sylvester prefix u_1..u_{s-1}, one inflated term
// u_s + delta, then the greedy-under tail of the exact remainder, so the
// reciprocals sum to exactly 1.
SeqSpec inflated_competitor(std::size_t s, long delta,
                            const ConstructCaps& caps = {});
// s in 1..7 crossed with delta in {1, 2, 5}.
std::vector<SeqSpec> competitor_family(const ConstructCaps& caps = {});

}  // namespace unitfrac
