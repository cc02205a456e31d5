#pragma once

#include <cstddef>

#include "unitfrac/ball.hpp"
#include "unitfrac/caps.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/seqspec.hpp"

namespace unitfrac {

struct LimitsConfig {
  unsigned max_digits = kMaxDigits;
  std::size_t term_cap = kDefaultTermCap;
  // Bit-size threshold above which the exact iterate hands over to the
  // log-domain recursion; 0 means the default policy of 64*digits.
  std::size_t exact_bits_override = 0;
};

struct LimitResult {
  Ball value;                    // e^J, radius <= 10^-digits
  std::size_t start_index;       // N, where the series anchors
  std::size_t series_terms_used;
  Ball tail_bound;               // rigorous bound on the truncated series tail
};

// lim term_n^(1/2^n) for a sequence following the Sylvester recurrence from
// index N: with z_n = term_n - 1/2 (so z_{n+1} = z_n^2 + 1/4), the limit is
// e^J for J = 2^-N log z_N + sum_{n>=N} 2^-(n+1) log(1 + 1/(4 z_n^2)).
// Truncation after the term for index K-1 is bounded by
// 2^-K log(1 + 1/(4 z_K^2)) since the z_n increase; the bound is folded into
// the ball. z_n stays an exact rational until it outgrows the bit threshold,
// then log z_n advances as log z_{n+1} = 2 log z_n + log1p(1/(4 z_n^2)).
LimitResult seq_limit(const SeqSpec& s, unsigned digits,
                      const LimitsConfig& cfg = {});

// term_n^(1/2^n) directly from the exact term: an independent cross-check
// converging to seq_limit.
Ball direct_estimate(const SeqSpec& s, std::size_t n, unsigned digits,
                     const LimitsConfig& cfg = {});

// f(x) = log x + sum_{j>=1} 2^-j log(1 + 1/a_j^2) with a_1 = x and
// a_{j+1} = (a_j^2 + 1)/2; strictly increasing in x. Tail after M terms is
// bounded by 2^-M log(1 + 1/a_{M+1}^2).
Ball f_eval(const Rational& x, unsigned digits, const LimitsConfig& cfg = {});

// h_j(x) = 1/(2x) - (prod_{k=0}^{j-1} g^(k)(x)) / (g^(j)(x)^3 + g^(j)(x))
// with g(x) = (x^2 + 1)/2; exact, so positivity is decidable by sign test.
Rational h_j_exact(unsigned j, const Rational& x);
Ball h_j_eval(unsigned j, const Rational& x, unsigned digits);

// Growth constant of Sylvester's sequence, 1.264085...
Ball vardi(unsigned digits, const LimitsConfig& cfg = {});

// The Sylvester sequence as a SeqSpec: prefix [2], recurrence from index 1.
SeqSpec sylvester_growth_spec();

}  // namespace unitfrac
