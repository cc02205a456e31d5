#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "unitfrac/caps.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/unitseq.hpp"

namespace unitfrac {

struct SearchConfig {
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t tie_cap = 64;
  bool collect_ties = false;
};

// Exact optimum over all non-decreasing positive-integer n-tuples whose
// reciprocals sum to strictly less than lambda.
struct BestUnderResult {
  std::size_t n = 0;
  Rational lambda;
  Rational optimum_sum;
  UnitSeq canonical_witness;  // lexicographically smallest optimal tuple
  std::vector<UnitSeq> ties;  // every optimal tuple, when ties were collected
  std::size_t nodes_explored = 0;
  bool complete = true;       // false when the node cap stopped the search
};

// Depth-first branch and bound. At a node with exact remainder r, k slots
// left, and previous denominator p, children are x = max(p, floor(1/r)+1),
// x+1, ...; a branch dies when partial + k/x cannot beat the incumbent (when
// collecting ties, only when it cannot even match it). The greedy
// underapproximation seeds the incumbent, so the result is independent of
// exploration order. Hitting the node cap flags the result incomplete rather
// than guessing.
BestUnderResult best_under(const Rational& lambda, std::size_t n,
                           const SearchConfig& cfg = {});

// Independent oracle: plain exhaustive enumeration over the same domain,
// bounded per node only by the greedy incumbent (never by discovered optima),
// so any branch-and-bound bug shows up as a disagreement. n <= 4.
BestUnderResult naive_best_under_oracle(const Rational& lambda, std::size_t n,
                                        std::size_t hard_cap = kDefaultNodeCap);

// True iff exactly one optimal tuple exists. Requires a complete search.
bool is_best_unique(const Rational& lambda, std::size_t n,
                    const SearchConfig& cfg = {});

struct GreedyProbeRow {
  std::size_t n = 0;
  Rational r_n;  // optimal sum at this n
  UnitSeq witness;
  bool greedy_extension_of_previous = false;
};

// Finite evidence for the eventual-greediness question: per n, whether the
// optimal witness is the (n-1)-witness extended by one greedy step. Never a
// verification, only a record of what small cases do.
struct GreedyProbeReport {
  Rational theta;
  std::size_t n_max = 0;
  std::vector<GreedyProbeRow> per_n;
  // Least i such that every row past i extends greedily; absent when the
  // last row itself fails.
  std::optional<std::size_t> candidate_n0;
};

GreedyProbeReport eventually_greedy_probe(const Rational& theta,
                                          std::size_t n_max,
                                          const SearchConfig& cfg = {});

// Arithmetic predicates on a reduced fraction p/q in (0, 1]:
// nathanson: p divides q+1.
// chu: q odd, and l = 2 is the smallest positive l with p dividing q+l.
bool nathanson_condition(const BigInt& p, const BigInt& q);
bool chu_condition(const BigInt& p, const BigInt& q);

// Append-only (lambda, n) -> result store as newline-delimited JSON, so
// probe runs can resume. Writes are serialized; reads are concurrent. Only
// complete results are ever served back.
class ResultCache {
public:
  explicit ResultCache(std::string path);

  std::optional<BestUnderResult> lookup(const Rational& lambda, std::size_t n,
                                        bool need_ties) const;
  void append(const BestUnderResult& result, bool with_ties);
  std::size_t size() const;
  const std::string& path() const { return path_; }

private:
  struct Entry {
    BestUnderResult result;
    bool has_ties = false;
  };

  std::string path_;
  std::map<std::pair<std::string, std::size_t>, Entry> entries_;
  mutable std::shared_mutex mu_;
};

}  // namespace unitfrac
