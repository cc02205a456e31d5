#pragma once

#include <atomic>
#include <cstddef>
#include <deque>
#include <mutex>
#include <vector>

#include "unitfrac/caps.hpp"
#include "unitfrac/rational.hpp"

namespace unitfrac {

// Lazily extended sequence term_1 = seed, term_{n+1} = term_n^2 - term_n + 1.
// Materialized terms are immutable; extension is serialized behind a mutex
// while reads of already-materialized terms stay lock-free (deque storage
// keeps references stable across growth).
class SylvesterLikeSeq {
public:
  explicit SylvesterLikeSeq(const Rational& seed,
                            std::size_t term_cap = kDefaultTermCap);

  // 1-based; extends on demand up to the term cap.
  const Rational& term(std::size_t i) const;
  std::size_t materialized() const { return count_.load(std::memory_order_acquire); }
  const Rational& seed() const { return seed_; }
  std::size_t term_cap() const { return cap_; }

private:
  Rational seed_;
  std::size_t cap_;
  mutable std::mutex mu_;
  mutable std::deque<Rational> terms_;
  mutable std::atomic<std::size_t> count_;
};

// First n terms for a seed >= 2 (rational seeds welcome; the §-style
// half-integer values flow through the same recurrence).
std::vector<Rational> sylvester_terms(const Rational& seed, std::size_t n,
                                      std::size_t term_cap = kDefaultTermCap);

// First n terms of the greedy underapproximation of 1/t, computed by the
// product form w_{j+1} = 1 + t*w_1*...*w_j and cross-checked against both
// the recurrence form and the literal greedy steps.
std::vector<BigInt> unit_tail(const BigInt& t, std::size_t n,
                              std::size_t term_cap = kDefaultTermCap);

// Returns sum_{i<=k} 1/term_i + 1/(term_{k+1} - 1) and asserts it telescopes
// to exactly 1/(seed - 1) (the classical identity; equals 1 for seed 2).
Rational sylvester_partial_identity(const Rational& seed, std::size_t k,
                                    std::size_t term_cap = kDefaultTermCap);

}  // namespace unitfrac
