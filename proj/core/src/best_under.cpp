#include "unitfrac/best_under.hpp"

#include <fstream>
#include <mutex>
#include <string>
#include <utility>

#include <json.hpp>

#include "unitfrac/egyptian.hpp"
#include "unitfrac/error.hpp"

namespace unitfrac {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_lambda(const Rational& lambda) {
  if (!lambda.is_positive() || lambda > Rational(1)) {
    throw Error::invalid("lambda must lie in (0, 1]");
  }
}

void check_config(const SearchConfig& cfg) {
  if (cfg.node_cap == 0 || cfg.tie_cap == 0) {
    throw Error::invalid("search caps must be positive");
  }
}

// Smallest admissible denominator after `prev` with remainder `r`: the least
// x >= prev with 1/x strictly below r.
BigInt next_denominator(const Rational& r, const BigInt& prev) {
  BigInt x = r.reciprocal().floor() + 1;
  if (x < prev) x = prev;
  return x;
}

struct Dfs {
  Rational lambda;
  SearchConfig cfg;
  Rational incumbent;
  std::vector<BigInt> witness;
  bool have_witness = false;
  std::vector<std::vector<BigInt>> ties;
  std::vector<BigInt> path;
  std::size_t nodes = 0;
  bool truncated = false;

  void record(const Rational& sum) {
    if (sum > incumbent) {
      incumbent = sum;
      witness = path;
      have_witness = true;
      if (cfg.collect_ties) {
        ties.clear();
        ties.push_back(path);
      }
    } else if (cfg.collect_ties && sum == incumbent) {
      if (!have_witness) {
        witness = path;
        have_witness = true;
      }
      if (ties.size() >= cfg.tie_cap) {
        throw Error::cap("tie cap exceeded at " + std::to_string(ties.size()) +
                         " optimal tuples");
      }
      ties.push_back(path);
    }
  }

  void run(std::size_t k, const Rational& partial, const BigInt& prev) {
    if (k == 0) {
      record(partial);
      return;
    }
    const Rational r = lambda - partial;
    const Rational slots(static_cast<long>(k));
    for (BigInt x = next_denominator(r, prev);; x += 1) {
      const Rational best_through_x = partial + slots / Rational(x);
      const bool dead = cfg.collect_ties ? best_through_x < incumbent
                                         : best_through_x <= incumbent;
      if (dead) return;
      if (nodes >= cfg.node_cap) {
        truncated = true;
        return;
      }
      ++nodes;
      path.push_back(x);
      run(k - 1, partial + Rational(BigInt(1), x), x);
      path.pop_back();
      if (truncated) return;
    }
  }
};

}  // namespace

BestUnderResult best_under(const Rational& lambda, std::size_t n,
                           const SearchConfig& cfg) {
  check_lambda(lambda);
  check_config(cfg);
  if (n == 0) throw Error::invalid("n must be positive");

  const UnitSeq greedy = greedy_under(lambda, n, std::max(n, kDefaultTermCap));

  Dfs dfs;
  dfs.lambda = lambda;
  dfs.cfg = cfg;
  dfs.incumbent = greedy.sum();
  if (!cfg.collect_ties) {
    // The first leaf in lexicographic order is exactly the greedy tuple, so
    // seeding it keeps the witness canonical even if nothing beats it.
    dfs.witness = greedy.denominators();
    dfs.have_witness = true;
  }
  dfs.run(n, Rational(0), BigInt(1));
  if (!dfs.have_witness) {
    dfs.witness = greedy.denominators();
    dfs.have_witness = true;
  }

  BestUnderResult out;
  out.n = n;
  out.lambda = lambda;
  out.optimum_sum = dfs.incumbent;
  out.canonical_witness = UnitSeq::from_denominators(dfs.witness);
  for (const auto& t : dfs.ties) out.ties.push_back(UnitSeq::from_denominators(t));
  out.nodes_explored = dfs.nodes;
  out.complete = !dfs.truncated;
  return out;
}

namespace {

struct Exhaustive {
  Rational lambda;
  Rational greedy_sum;
  std::size_t hard_cap = 0;
  Rational best;
  std::vector<BigInt> witness;
  bool have_best = false;
  std::vector<std::vector<BigInt>> ties;
  std::vector<BigInt> path;
  std::size_t nodes = 0;

  // Sum of the greedy completion from this node, the only incumbent the
  // oracle is allowed to use for its per-node denominator ceiling.
  Rational node_floor(std::size_t k, Rational partial, BigInt prev) const {
    for (std::size_t i = 0; i < k; ++i) {
      prev = next_denominator(lambda - partial, prev);
      partial += Rational(BigInt(1), prev);
    }
    return partial < greedy_sum ? greedy_sum : partial;
  }

  void record(const Rational& sum) {
    if (!have_best || sum > best) {
      best = sum;
      witness = path;
      have_best = true;
      ties.clear();
      ties.push_back(path);
    } else if (sum == best) {
      ties.push_back(path);
    }
  }

  void run(std::size_t k, const Rational& partial, const BigInt& prev) {
    if (k == 0) {
      record(partial);
      return;
    }
    const Rational r = lambda - partial;
    const Rational gap = node_floor(k, partial, prev) - partial;
    // Keep x with partial + k/x >= the node floor, i.e. x <= k/gap.
    const BigInt x_max = (Rational(static_cast<long>(k)) / gap).floor();
    for (BigInt x = next_denominator(r, prev); x <= x_max; x += 1) {
      if (nodes >= hard_cap) {
        throw Error::cap("oracle enumeration exceeded its hard cap");
      }
      ++nodes;
      path.push_back(x);
      run(k - 1, partial + Rational(BigInt(1), x), x);
      path.pop_back();
    }
  }
};

}  // namespace

BestUnderResult naive_best_under_oracle(const Rational& lambda, std::size_t n,
                                        std::size_t hard_cap) {
  check_lambda(lambda);
  if (n == 0) throw Error::invalid("n must be positive");
  if (n > 4) throw Error::invalid("the oracle only supports n <= 4");
  if (hard_cap == 0) throw Error::invalid("hard cap must be positive");

  Exhaustive e;
  e.lambda = lambda;
  e.greedy_sum = greedy_under(lambda, n, std::max(n, kDefaultTermCap)).sum();
  e.hard_cap = hard_cap;
  e.run(n, Rational(0), BigInt(1));
  if (!e.have_best) throw Error::verification("oracle found no feasible tuple");

  BestUnderResult out;
  out.n = n;
  out.lambda = lambda;
  out.optimum_sum = e.best;
  out.canonical_witness = UnitSeq::from_denominators(e.witness);
  for (const auto& t : e.ties) out.ties.push_back(UnitSeq::from_denominators(t));
  out.nodes_explored = e.nodes;
  out.complete = true;
  return out;
}

bool is_best_unique(const Rational& lambda, std::size_t n,
                    const SearchConfig& cfg) {
  SearchConfig with_ties = cfg;
  with_ties.collect_ties = true;
  const BestUnderResult r = best_under(lambda, n, with_ties);
  if (!r.complete) {
    throw Error::cap("search incomplete; uniqueness cannot be decided");
  }
  return r.ties.size() == 1;
}

GreedyProbeReport eventually_greedy_probe(const Rational& theta,
                                          std::size_t n_max,
                                          const SearchConfig& cfg) {
  check_lambda(theta);
  if (n_max == 0) throw Error::invalid("n_max must be positive");
  if (n_max > 6) throw Error::invalid("probe depth is limited to n_max <= 6");

  SearchConfig plain = cfg;
  plain.collect_ties = false;

  GreedyProbeReport rep;
  rep.theta = theta;
  rep.n_max = n_max;
  UnitSeq prev;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const BestUnderResult res = best_under(theta, n, plain);
    if (!res.complete) {
      throw Error::cap("probe aborted: search incomplete at n = " +
                       std::to_string(n));
    }
    const BigInt step = next_denominator(
        theta - prev.sum(),
        prev.empty() ? BigInt(1) : prev.denominators().back());
    UnitSeq extended = prev;
    extended.push_back(step);
    rep.per_n.push_back(GreedyProbeRow{n, res.optimum_sum,
                                       res.canonical_witness,
                                       res.canonical_witness == extended});
    prev = res.canonical_witness;
  }

  std::size_t n0 = n_max;
  while (n0 > 0 && rep.per_n[n0 - 1].greedy_extension_of_previous) --n0;
  if (n0 < n_max) rep.candidate_n0 = n0;
  return rep;
}

namespace {

void check_reduced(const BigInt& p, const BigInt& q) {
  if (p <= 0 || q <= 0 || p > q) {
    throw Error::invalid("the fraction must satisfy 0 < p/q <= 1");
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw Error::invalid("the fraction must be in lowest terms");
}

}  // namespace

bool nathanson_condition(const BigInt& p, const BigInt& q) {
  check_reduced(p, q);
  return (q + 1) % p == 0;
}

bool chu_condition(const BigInt& p, const BigInt& q) {
  check_reduced(p, q);
  return q % 2 != 0 && (q + 1) % p != 0 && (q + 2) % p == 0;
}

namespace {

std::string cache_line(const BestUnderResult& r, bool with_ties) {
  ordered_json j;
  j["lambda"] = r.lambda.to_string();
  j["n"] = r.n;
  j["sum"] = r.optimum_sum.to_string();
  ordered_json w = ordered_json::array();
  for (const BigInt& d : r.canonical_witness.denominators()) w.push_back(d.get_str());
  j["witness"] = std::move(w);
  if (with_ties) {
    ordered_json ts = ordered_json::array();
    for (const UnitSeq& t : r.ties) {
      ordered_json one = ordered_json::array();
      for (const BigInt& d : t.denominators()) one.push_back(d.get_str());
      ts.push_back(std::move(one));
    }
    j["ties"] = std::move(ts);
  }
  j["complete"] = r.complete;
  return j.dump();
}

UnitSeq parse_witness(const ordered_json& arr) {
  if (!arr.is_array()) throw Error::invalid("cache witness must be an array");
  UnitSeq s;
  for (const auto& d : arr) {
    if (!d.is_string()) throw Error::invalid("cache denominators must be strings");
    s.push_back(bigint_from_string(d.get<std::string>()));
  }
  return s;
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // nothing cached yet
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const ordered_json::exception&) {
      throw Error::invalid("cache line " + std::to_string(lineno) +
                           " is not valid JSON");
    }
    if (!j.contains("lambda") || !j.contains("n") || !j.contains("sum") ||
        !j.contains("witness") || !j.contains("complete")) {
      throw Error::invalid("cache line " + std::to_string(lineno) +
                           " is missing required keys");
    }
    Entry e;
    e.result.lambda = Rational::from_string(j["lambda"].get<std::string>());
    e.result.n = j["n"].get<std::size_t>();
    e.result.optimum_sum = Rational::from_string(j["sum"].get<std::string>());
    e.result.canonical_witness = parse_witness(j["witness"]);
    if (j.contains("ties")) {
      e.has_ties = true;
      for (const auto& t : j["ties"]) e.result.ties.push_back(parse_witness(t));
    }
    e.result.complete = j["complete"].get<bool>();
    entries_.insert_or_assign(
        {e.result.lambda.to_string(), e.result.n}, std::move(e));
  }
}

std::optional<BestUnderResult> ResultCache::lookup(const Rational& lambda,
                                                   std::size_t n,
                                                   bool need_ties) const {
  std::shared_lock lock(mu_);
  const auto it = entries_.find({lambda.to_string(), n});
  if (it == entries_.end()) return std::nullopt;
  if (!it->second.result.complete) return std::nullopt;
  if (need_ties && !it->second.has_ties) return std::nullopt;
  return it->second.result;
}

void ResultCache::append(const BestUnderResult& result, bool with_ties) {
  std::unique_lock lock(mu_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error::invalid("cannot open cache file " + path_);
  out << cache_line(result, with_ties) << '\n';
  out.flush();
  Entry e{result, with_ties};
  if (!with_ties) e.result.ties.clear();
  entries_.insert_or_assign({result.lambda.to_string(), result.n}, std::move(e));
}

std::size_t ResultCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace unitfrac
