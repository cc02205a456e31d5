#include "unitfrac/sylvester.hpp"

#include "unitfrac/error.hpp"

namespace unitfrac {

namespace {

void check_seed(const Rational& seed) {
  if (seed < Rational(2)) {
    throw Error::invalid("sylvester seed must be >= 2, got " + seed.to_string());
  }
}

void check_term_count(std::size_t n, std::size_t cap) {
  if (n < 1) throw Error::invalid("need at least one term");
  if (n > cap) {
    throw Error::cap("requested " + std::to_string(n) + " terms, cap is " +
                     std::to_string(cap));
  }
}

Rational next_term(const Rational& t) { return t * t - t + Rational(1); }

}  // namespace

SylvesterLikeSeq::SylvesterLikeSeq(const Rational& seed, std::size_t term_cap)
    : seed_(seed), cap_(term_cap), count_(0) {
  check_seed(seed);
  std::lock_guard<std::mutex> lock(mu_);
  terms_.push_back(seed_);
  count_.store(1, std::memory_order_release);
}

const Rational& SylvesterLikeSeq::term(std::size_t i) const {
  if (i < 1) throw Error::invalid("term index is 1-based");
  if (i > cap_) {
    throw Error::cap("term " + std::to_string(i) + " exceeds the cap " +
                     std::to_string(cap_));
  }
  if (i <= count_.load(std::memory_order_acquire)) return terms_[i - 1];
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t have = count_.load(std::memory_order_relaxed);
  while (have < i) {
    terms_.push_back(next_term(terms_.back()));
    count_.store(++have, std::memory_order_release);
  }
  return terms_[i - 1];
}

std::vector<Rational> sylvester_terms(const Rational& seed, std::size_t n,
                                      std::size_t term_cap) {
  check_seed(seed);
  check_term_count(n, term_cap);
  std::vector<Rational> out;
  out.reserve(n);
  out.push_back(seed);
  while (out.size() < n) out.push_back(next_term(out.back()));
  return out;
}

std::vector<BigInt> unit_tail(const BigInt& t, std::size_t n, std::size_t term_cap) {
  if (t < 1) throw Error::invalid("unit fraction denominator must be >= 1");
  check_term_count(n, term_cap);
  std::vector<BigInt> out;
  out.reserve(n);
  BigInt product(1);
  Rational remainder(BigInt(1), t);
  for (std::size_t j = 0; j < n; ++j) {
    BigInt w = j == 0 ? BigInt(t + 1) : BigInt(t * product + 1);
    if (j > 0) {
      const BigInt& p = out.back();
      if (w != p * p - p + 1) {
        throw Error::verification("product and recurrence forms disagree");
      }
    }
    // The product form must coincide with the literal greedy step.
    if (w != remainder.reciprocal().floor() + 1) {
      throw Error::verification("unit tail is not the greedy expansion");
    }
    product *= w;
    remainder -= Rational(BigInt(1), w);
    out.push_back(w);
  }
  return out;
}

Rational sylvester_partial_identity(const Rational& seed, std::size_t k,
                                    std::size_t term_cap) {
  check_seed(seed);
  if (k < 1) throw Error::invalid("need at least one term");
  std::vector<Rational> terms = sylvester_terms(seed, k + 1, term_cap);
  Rational sum(0);
  for (std::size_t i = 0; i < k; ++i) sum += terms[i].reciprocal();
  Rational value = sum + (terms[k] - Rational(1)).reciprocal();
  if (value != (seed - Rational(1)).reciprocal()) {
    throw Error::verification("telescoping identity failed for seed " +
                              seed.to_string());
  }
  return value;
}

}  // namespace unitfrac
