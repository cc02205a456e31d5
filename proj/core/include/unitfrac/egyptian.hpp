#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unitfrac/caps.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/seqspec.hpp"
#include "unitfrac/unitseq.hpp"

namespace unitfrac {

// Split of a greedy underapproximation into its finite exact part and the
// unit-fraction tail: greedy_under(lambda, split_index) equals
// approx_component with the last denominator incremented by one, and the
// infinite remainder is the greedy underapproximation of tail_unit_fraction.
struct GreedyDecomposition {
  UnitSeq approx_component;
  Rational tail_unit_fraction;
  std::size_t split_index;
};

struct DominancePair {
  bool hypothesis;  // every prefix product of a <= matching prefix product of x
  bool conclusion;  // sum 1/x <= sum 1/a
};

// Greedy Egyptian approximation: repeatedly take the smallest denominator not
// yet used whose unit fraction fits in the remainder. Terminates with the
// reciprocal sum exactly equal to lambda.
UnitSeq greedy_approx(const Rational& lambda);

// One greedy underapproximation step: x = floor(1/remainder) + 1, which is
// the unique x with 1/x < remainder <= 1/(x-1). Throws if x <= previous
// (greedy denominators strictly increase after the first step).
BigInt greedy_under_step(const Rational& remainder, const BigInt& previous);

// First n terms of the greedy underapproximation of lambda; every partial
// sum is strictly below lambda. Terms roughly square in size each step.
UnitSeq greedy_under(const Rational& lambda, std::size_t n,
                     std::size_t term_cap = kDefaultTermCap);

GreedyDecomposition decompose(const Rational& lambda);

// Smallest index N from which the whole sequence satisfies
// term_{n+1} = term_n^2 - term_n + 1; absent for a finite sequence whose
// final terms break the recurrence. Greedy tails are materialized (within
// the term cap) until the remainder becomes a unit fraction, from which
// point the recurrence provably holds forever.
std::optional<std::size_t> is_eventually_sylvester(
    const SeqSpec& s, std::size_t term_cap = kDefaultTermCap);

UnitSeq increasing_rearrangement(const std::vector<BigInt>& values);

// Nathanson's product-sum lemma as a checkable predicate pair.
DominancePair product_dominance_implies_sum(const UnitSeq& x, const UnitSeq& a);

// SeqSpec for the full greedy underapproximation of lambda: prefix_len
// materialized terms plus a greedy tail carrying the exact remainder.
SeqSpec greedy_under_spec(const Rational& lambda, std::size_t prefix_len,
                          std::size_t term_cap = kDefaultTermCap);

}  // namespace unitfrac
