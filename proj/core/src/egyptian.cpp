#include "unitfrac/egyptian.hpp"

#include <algorithm>

namespace unitfrac {

namespace {

void check_target_range(const Rational& lambda) {
  if (!lambda.is_positive() || lambda > Rational(1)) {
    throw Error::invalid("target must be in (0, 1], got " + lambda.to_string());
  }
}

constexpr std::size_t kStepGuard = 1u << 20;

}  // namespace

UnitSeq greedy_approx(const Rational& lambda) {
  check_target_range(lambda);
  UnitSeq out;
  Rational r = lambda;
  BigInt prev(1);
  for (std::size_t guard = 0; !r.is_zero(); ++guard) {
    if (guard > kStepGuard) {
      throw Error::verification("greedy approximation failed to terminate");
    }
    BigInt k = r.reciprocal().ceil();
    bool clamped = k <= prev;
    if (clamped) k = prev + 1;
    Rational next = r - Rational(BigInt(1), k);
    // On an unclamped step 1/k <= r < 1/(k-1), so the numerator of the
    // remainder strictly decreases; clamped steps cannot increase it.
    if (next.num() > r.num() || (!clamped && next.num() >= r.num())) {
      throw Error::verification("greedy approximation numerator failed to decrease");
    }
    out.push_back(k);
    r = next;
    prev = k;
  }
  if (out.sum() != lambda) {
    throw Error::verification("greedy approximation sum mismatch");
  }
  return out;
}

BigInt greedy_under_step(const Rational& remainder, const BigInt& previous) {
  if (!remainder.is_positive()) {
    throw Error::invalid("greedy step needs a positive remainder");
  }
  BigInt x = remainder.reciprocal().floor() + 1;
  if (x <= previous) {
    throw Error::verification("greedy step did not increase: " + x.get_str() +
                              " after " + previous.get_str());
  }
  return x;
}

UnitSeq greedy_under(const Rational& lambda, std::size_t n, std::size_t term_cap) {
  check_target_range(lambda);
  if (n < 1) throw Error::invalid("need at least one term");
  if (n > term_cap) {
    throw Error::cap("requested " + std::to_string(n) +
                     " greedy terms, cap is " + std::to_string(term_cap));
  }
  UnitSeq out;
  Rational r = lambda;
  BigInt prev(0);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt x = greedy_under_step(r, prev);
    out.push_back(x);
    r -= Rational(BigInt(1), x);
    if (!r.is_positive()) {
      throw Error::verification("greedy underapproximation remainder vanished");
    }
    prev = x;
  }
  return out;
}

GreedyDecomposition decompose(const Rational& lambda) {
  check_target_range(lambda);
  UnitSeq approx = greedy_approx(lambda);
  std::size_t n = approx.size();
  UnitSeq under = greedy_under(lambda, n, std::max(n, kDefaultTermCap));
  for (std::size_t i = 1; i < n; ++i) {
    if (under.denominator(i) != approx.denominator(i)) {
      throw Error::verification("greedy approximation and underapproximation "
                                "disagree before the split index");
    }
  }
  const BigInt& last = approx.denominator(n);
  if (under.denominator(n) != last + 1) {
    throw Error::verification("split term is not the approximation term plus one");
  }
  return GreedyDecomposition{approx, Rational(BigInt(1), last), n};
}

std::optional<std::size_t> is_eventually_sylvester(const SeqSpec& s,
                                                   std::size_t term_cap) {
  std::vector<Rational> terms = s.prefix();
  std::optional<std::size_t> guaranteed_from;

  if (s.has_sylvester_tail()) {
    guaranteed_from = std::get<SylvesterTail>(s.tail()).from_index;
  } else if (s.has_greedy_tail()) {
    // Extend until the remainder is a unit fraction whose pure greedy step
    // is unclamped; from there the tail is the Sylvester-type expansion of
    // that unit fraction and the recurrence holds forever.
    Rational r = std::get<GreedyUnderTail>(s.tail()).remaining;
    BigInt prev = terms.empty() ? BigInt(1) : terms.back().num();
    while (true) {
      if (r.is_unit_fraction() && r.den() >= prev) {
        guaranteed_from = terms.size() + 1;
        terms.push_back(Rational(r.den() + 1));
        break;
      }
      if (terms.size() >= term_cap) {
        throw Error::cap("greedy tail did not hand off to a unit fraction "
                         "within the term cap");
      }
      BigInt x = r.reciprocal().floor() + 1;
      if (x <= prev) x = prev + 1;
      terms.push_back(Rational(x));
      r -= Rational(BigInt(1), x);
      prev = x;
    }
  }

  auto pair_ok = [&terms](std::size_t i) {  // recurrence between terms i, i+1 (1-based)
    const Rational& t = terms[i - 1];
    return terms[i] == t * t - t + Rational(1);
  };

  if (!guaranteed_from.has_value()) {
    // Finite sequence: the recurrence must hold through the very end.
    std::size_t len = terms.size();
    if (len == 0) return std::nullopt;
    if (len == 1) return 1;  // vacuously Sylvester from its only index
    if (!pair_ok(len - 1)) return std::nullopt;
    std::size_t n = len - 1;
    while (n > 1 && pair_ok(n - 1)) --n;
    return n;
  }

  std::size_t n = *guaranteed_from;
  while (n > 1 && pair_ok(n - 1)) --n;
  return n;
}

UnitSeq increasing_rearrangement(const std::vector<BigInt>& values) {
  std::vector<BigInt> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error::invalid("rearrangement input must be distinct");
  }
  return UnitSeq::from_denominators(std::move(sorted));
}

DominancePair product_dominance_implies_sum(const UnitSeq& x, const UnitSeq& a) {
  if (x.size() != a.size()) {
    throw Error::invalid("dominance check requires equal lengths");
  }
  bool hypothesis = true;
  BigInt px(1), pa(1);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    px *= x.denominator(i);
    pa *= a.denominator(i);
    if (pa > px) {
      hypothesis = false;
      break;
    }
  }
  bool conclusion = x.sum() <= a.sum();
  return DominancePair{hypothesis, conclusion};
}

SeqSpec greedy_under_spec(const Rational& lambda, std::size_t prefix_len,
                          std::size_t term_cap) {
  check_target_range(lambda);
  std::vector<Rational> prefix;
  Rational remaining = lambda;
  if (prefix_len > 0) {
    UnitSeq head = greedy_under(lambda, prefix_len, term_cap);
    for (const auto& d : head.denominators()) prefix.push_back(Rational(d));
    remaining = lambda - head.sum();
  }
  return SeqSpec(std::move(prefix), GreedyUnderTail{remaining}, lambda);
}

}  // namespace unitfrac
