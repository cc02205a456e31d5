#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "unitfrac/caps.hpp"
#include "unitfrac/error.hpp"
#include "unitfrac/rational.hpp"

namespace unitfrac {

// Tail rules for infinite sequences. Indices are 1-based everywhere.
struct NoTail {};
struct SylvesterTail {
  std::size_t from_index;  // recurrence term_{n+1} = term_n^2 - term_n + 1 holds for n >= from_index
};
struct GreedyUnderTail {
  Rational remaining;  // exact mass the tail sums to; equals target - prefix sum
};

// A finite exact prefix plus a tail rule: the uniform representation of every
// infinite sequence handled here. Prefix terms are rationals >= 2,
// non-decreasing; greedy tails additionally require an integral prefix.
// Invariants are checked at construction, so a SeqSpec in hand is valid.
class SeqSpec {
public:
  using Tail = std::variant<NoTail, SylvesterTail, GreedyUnderTail>;

  SeqSpec(std::vector<Rational> prefix, Tail tail,
          std::optional<Rational> target = std::nullopt);

  const std::vector<Rational>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }
  bool is_finite() const { return std::holds_alternative<NoTail>(tail_); }
  bool has_sylvester_tail() const { return std::holds_alternative<SylvesterTail>(tail_); }
  bool has_greedy_tail() const { return std::holds_alternative<GreedyUnderTail>(tail_); }

  Rational prefix_sum() const;
  // Exact sum of the entire (possibly infinite) sequence of reciprocals.
  Rational total_sum() const { return target_; }

  // First `count` terms, materializing past the prefix via the tail rule.
  // Greedy tails advance by the smallest integer x > previous with 1/x
  // strictly below the remaining mass.
  std::vector<Rational> materialize(std::size_t count,
                                    std::size_t term_cap = kDefaultTermCap) const;
  Rational term(std::size_t i, std::size_t term_cap = kDefaultTermCap) const;

  std::string to_json() const;
  static SeqSpec from_json(const std::string& json_text);

private:
  std::vector<Rational> prefix_;
  Tail tail_;
  Rational target_;
};

}  // namespace unitfrac
