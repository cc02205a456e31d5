#include "unitfrac/construct.hpp"

#include <algorithm>
#include <string>

#include "unitfrac/error.hpp"
#include "unitfrac/sylvester.hpp"

namespace unitfrac {

namespace {

struct Window {
  Rational um;
  Rational cm, cm1, cm2;
  Rational remainder;  // 1/(u_m - 1) - 1/c_m - 1/c_{m+1} - 1/c_{m+2}
};

Window window_at(std::size_t m, std::size_t term_cap) {
  const std::vector<Rational> u = sylvester_terms(Rational(2), m, term_cap);
  const Rational um = u[m - 1];
  Window w;
  w.um = um;
  if (m == 1) {
    w.cm = um;
    w.cm1 = um * um;
    w.cm2 = (um * um * um * (um - Rational(1)) + Rational(1)) / Rational(2);
  } else {
    w.cm = um + Rational(1);
    w.cm1 = um * um / Rational(2);
    w.cm2 = (um * um * (um * um - Rational(1)) + Rational(2)) / Rational(2);
  }
  w.remainder = (um - Rational(1)).reciprocal() - w.cm.reciprocal() -
                w.cm1.reciprocal() - w.cm2.reciprocal();
  return w;
}

void check_claim_cap(std::size_t m, const ConstructCaps& caps) {
  if (m == 0) throw Error::invalid("m must be positive");
  if (m > caps.claim_cap) {
    throw Error::cap("m = " + std::to_string(m) + " beyond the claim cap " +
                     std::to_string(caps.claim_cap));
  }
}

bool claim1_holds(const Window& w) {
  const Rational product_form =
      ((w.um - Rational(1)) * w.cm * w.cm1 * w.cm2).reciprocal();
  if (w.remainder != product_form) return false;
  if (w.remainder.num() != 1) return false;
  if (w.um != Rational(2)) {
    // m > 1 closed form: 4 / (u^2(u^2-1) [u^2(u^2-1)+2])
    const Rational A = w.um * w.um * (w.um * w.um - Rational(1));
    if (w.remainder != Rational(4) / (A * (A + Rational(2)))) return false;
  }
  return true;
}

bool claim2_holds(std::size_t m, const Window& w, std::size_t term_cap) {
  const std::vector<Rational> u = sylvester_terms(Rational(2), m + 2, term_cap);
  Rational window_u;
  for (std::size_t i = 0; i < m + 2; ++i) window_u += u[i].reciprocal();
  Rational window_c;
  for (std::size_t i = 0; i + 1 < m; ++i) window_c += u[i].reciprocal();
  window_c += w.cm.reciprocal() + w.cm1.reciprocal() + w.cm2.reciprocal();
  if (!(window_c < window_u)) return false;
  if (m > 1) {
    const Rational gap = window_u - window_c;
    const Rational direct = F_difference(w.um);
    const Rational closed = F_closed_form(w.um);
    if (gap != direct || direct != closed) return false;
    if (!closed.is_positive()) return false;
  }
  return true;
}

}  // namespace

std::size_t find_divergence_m(const SeqSpec& a, const ConstructCaps& caps) {
  if (a.total_sum() != Rational(1)) {
    throw Error::invalid("competitor reciprocals must sum to exactly 1");
  }
  const SylvesterLikeSeq u(Rational(2), caps.term_cap);
  Rational prev(1);
  for (std::size_t i = 1; i <= caps.term_cap; ++i) {
    const Rational ai = a.term(i, caps.term_cap);
    if (!ai.is_integer()) {
      throw Error::invalid("competitor terms must be integers");
    }
    if (!(ai > prev)) {
      throw Error::invalid("competitor must be strictly increasing");
    }
    prev = ai;
    const Rational& ui = u.term(i);
    if (ai == ui) continue;
    if (ai < ui) {
      // Sum of 1/u_j for j < i plus 1/(u_i - 1) is already exactly 1, so any
      // smaller term here pushes the total past 1.
      throw Error::invalid("competitor term below the Sylvester term");
    }
    return i;
  }
  throw Error::cap("no divergence from the Sylvester sequence within the term cap");
}

ConstructionResult build_c(const SeqSpec& a, const ConstructCaps& caps) {
  const std::size_t m = find_divergence_m(a, caps);
  const Window w = window_at(m, caps.term_cap);
  if (!w.remainder.is_positive() || w.remainder.num() != 1) {
    throw Error::verification("window leftover is not a unit fraction");
  }

  std::vector<Rational> prefix;
  prefix.reserve(m + 3);
  if (m > 1) {
    const std::vector<Rational> u = sylvester_terms(Rational(2), m - 1, caps.term_cap);
    prefix.assign(u.begin(), u.end());
  }
  prefix.push_back(w.cm);
  prefix.push_back(w.cm1);
  prefix.push_back(w.cm2);
  prefix.push_back(Rational(w.remainder.den()) + Rational(1));

  ConstructionResult out{
      m,
      SeqSpec(std::move(prefix), SylvesterTail{m + 3}, Rational(1)),
      w.remainder,
      ClaimChecks{claim1_holds(w), claim2_holds(m, w, caps.term_cap)}};
  return out;
}

bool verify_claim1(std::size_t m, const ConstructCaps& caps) {
  check_claim_cap(m, caps);
  return claim1_holds(window_at(m, caps.term_cap));
}

Rational claim1_remainder(std::size_t m, const ConstructCaps& caps) {
  check_claim_cap(m, caps);
  const Window w = window_at(m, caps.term_cap);
  if (!claim1_holds(w)) throw Error::verification("window leftover mismatch");
  return w.remainder;
}

bool verify_claim2(std::size_t m, const ConstructCaps& caps) {
  check_claim_cap(m, caps);
  return claim2_holds(m, window_at(m, caps.term_cap), caps.term_cap);
}

Rational F_difference(const Rational& x) {
  if (x.is_zero() || x == Rational(-1)) {
    throw Error::invalid("F has poles at 0 and -1");
  }
  const Rational one(1), two(2);
  const Rational s = x * x - x + one;              // u_{m+1} as a function of x
  const Rational t = s * (x * x - x) + one;        // u_{m+2}
  const Rational q = x * x * (x * x - one) + two;  // c_{m+2} denominator * 2
  return x.reciprocal() + s.reciprocal() + t.reciprocal() -
         (x + one).reciprocal() - two / (x * x) - two / q;
}

Rational F_closed_form(const Rational& x) {
  if (x.is_zero() || x == Rational(-1)) {
    throw Error::invalid("F has poles at 0 and -1");
  }
  const Rational one(1), two(2);
  const Rational x2 = x * x;
  const Rational x3 = x2 * x;
  const Rational x4 = x2 * x2;
  const Rational num =
      (x - two) * (Rational(3) * x4 - Rational(4) * x3 + Rational(3) * x2 -
                   two * x + two);
  const Rational den = x2 * (x + one) * (x2 - x + one) * (x4 - x2 + two) *
                       (x4 - two * x3 + two * x2 - x + one);
  return num / den;
}

bool verify_F_identity(const std::vector<Rational>& sample_points) {
  std::vector<Rational> pts = sample_points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 12) {
    throw Error::invalid("the identity needs at least 12 distinct sample points");
  }
  for (const Rational& x : pts) {
    if (F_difference(x) != F_closed_form(x)) return false;
  }
  return true;
}

bool lemma31_check(const SeqSpec& a, const ConstructionResult& c,
                   std::size_t k, const ConstructCaps& caps) {
  if (k < c.divergence_m) {
    throw Error::invalid("k must be at least the divergence index");
  }
  const std::vector<Rational> at = a.materialize(k, caps.term_cap);
  const std::vector<Rational> ct = c.c_spec.materialize(k, caps.term_cap);
  Rational sum_a, sum_c;
  for (std::size_t i = 0; i < k; ++i) {
    sum_a += at[i].reciprocal();
    sum_c += ct[i].reciprocal();
  }
  return sum_a <= sum_c;
}

SeqSpec inflated_competitor(std::size_t s, long delta, const ConstructCaps& caps) {
  if (s == 0) throw Error::invalid("s must be positive");
  if (delta <= 0) throw Error::invalid("the inflation must be positive");
  const std::vector<Rational> u = sylvester_terms(Rational(2), s, caps.term_cap);
  std::vector<Rational> prefix(u.begin(), u.end() - 1);
  const Rational inflated = u[s - 1] + Rational(delta);
  prefix.push_back(inflated);
  const Rational remaining =
      (u[s - 1] - Rational(1)).reciprocal() - inflated.reciprocal();
  return SeqSpec(std::move(prefix), GreedyUnderTail{remaining}, Rational(1));
}

std::vector<SeqSpec> competitor_family(const ConstructCaps& caps) {
  std::vector<SeqSpec> out;
  out.reserve(21);
  for (std::size_t s = 1; s <= 7; ++s) {
    for (long delta : {1L, 2L, 5L}) {
      out.push_back(inflated_competitor(s, delta, caps));
    }
  }
  return out;
}

}  // namespace unitfrac
