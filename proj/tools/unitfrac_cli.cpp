// unitfrac: exact Egyptian-fraction toolkit.
//
// Subcommands: greedy-approx, greedy-under, decompose, sylvester, construct,
// limit, vardi, best-under, probe-greedy, check-claims, conditions.
//
// Exit codes: 0 ok, 2 invalid input, 3 cap exceeded or incomplete search,
// 4 verification failure.
//
// Option precedence: command-line flags, then UNITFRAC_* environment
// variables, then the --config JSON file, then built-in defaults.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unitfrac/ball.hpp"
#include "unitfrac/best_under.hpp"
#include "unitfrac/caps.hpp"
#include "unitfrac/construct.hpp"
#include "unitfrac/egyptian.hpp"
#include "unitfrac/error.hpp"
#include "unitfrac/limits.hpp"
#include "unitfrac/rational.hpp"
#include "unitfrac/seqspec.hpp"
#include "unitfrac/sylvester.hpp"
#include "unitfrac/unitseq.hpp"

namespace {

using unitfrac::BigInt;
using unitfrac::Error;
using unitfrac::Rational;
using unitfrac::UnitSeq;
using ordered_json = nlohmann::ordered_json;

enum class Format { human, json, csv };

struct Config {
  unsigned digits = unitfrac::kDefaultDigits;
  std::size_t term_cap = unitfrac::kDefaultTermCap;
  std::size_t claim_cap = unitfrac::kDefaultClaimCap;
  std::size_t node_cap = unitfrac::kDefaultNodeCap;
  std::string cache_path;
  Format format = Format::human;
};

Format parse_format(const std::string& s) {
  if (s == "human") return Format::human;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw Error::invalid("unknown output format '" + s + "'");
}

unsigned long parse_count(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error::invalid(std::string(what) + " must be a positive integer");
  }
  unsigned long v = 0;
  try {
    v = std::stoul(s);
  } catch (const std::exception&) {
    throw Error::invalid(std::string(what) + " is out of range");
  }
  if (v == 0) throw Error::invalid(std::string(what) + " must be positive");
  return v;
}

// Layer an option source over the config: env beats file, flags beat both.
struct ConfigSources {
  // raw flag values; empty optional = flag not given
  std::optional<std::string> digits, term_cap, claim_cap, node_cap, cache_path,
      format;
  std::string config_file;

  static std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  }

  Config resolve() const {
    ordered_json file = ordered_json::object();
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw Error::invalid("cannot open config file " + config_file);
      try {
        in >> file;
      } catch (const ordered_json::exception&) {
        throw Error::invalid("config file is not valid JSON");
      }
      if (!file.is_object()) throw Error::invalid("config file must hold a JSON object");
    }
    auto pick = [&](const std::optional<std::string>& flag, const char* envname,
                    const char* key) -> std::optional<std::string> {
      if (flag) return flag;
      if (auto e = env(envname)) return e;
      if (file.contains(key)) {
        const auto& v = file.at(key);
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_unsigned() || v.is_number_integer()) {
          return std::to_string(v.get<long long>());
        }
        throw Error::invalid(std::string("config key '") + key +
                             "' must be a string or integer");
      }
      return std::nullopt;
    };

    Config c;
    if (auto v = pick(digits, "UNITFRAC_DIGITS", "digits")) {
      const unsigned long d = parse_count(*v, "digits");
      if (d > unitfrac::kMaxDigits) throw Error::cap("digits beyond configured max");
      c.digits = static_cast<unsigned>(d);
    }
    if (auto v = pick(term_cap, "UNITFRAC_TERM_CAP", "term_cap")) {
      c.term_cap = parse_count(*v, "term_cap");
    }
    if (auto v = pick(claim_cap, "UNITFRAC_CLAIM_CAP", "claim_cap")) {
      c.claim_cap = parse_count(*v, "claim_cap");
    }
    if (auto v = pick(node_cap, "UNITFRAC_NODE_CAP", "node_cap")) {
      c.node_cap = parse_count(*v, "node_cap");
    }
    if (auto v = pick(cache_path, "UNITFRAC_CACHE_PATH", "cache_path")) {
      c.cache_path = *v;
    }
    if (auto v = pick(format, "UNITFRAC_FORMAT", "format")) {
      c.format = parse_format(*v);
    }
    return c;
  }
};

void require_not_csv(Format f, const char* command) {
  if (f == Format::csv) {
    throw Error::invalid(std::string(command) + " has no CSV form");
  }
}

ordered_json seq_json(const UnitSeq& s) {
  ordered_json a = ordered_json::array();
  for (const BigInt& d : s.denominators()) a.push_back(d.get_str());
  return a;
}

ordered_json rationals_json(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const Rational& r : v) a.push_back(r.to_string());
  return a;
}

ordered_json ball_json(const unitfrac::Ball& b) {
  return ordered_json::parse(b.to_json());
}

ordered_json limit_json(const unitfrac::LimitResult& lr) {
  ordered_json j;
  j["value"] = ball_json(lr.value);
  j["start_index"] = lr.start_index;
  j["series_terms_used"] = lr.series_terms_used;
  j["tail_bound"] = ball_json(lr.tail_bound);
  return j;
}

std::string read_spec_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error::invalid("cannot open spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// ---- subcommand runners ------------------------------------------------

int run_greedy_approx(const Config& cfg, const std::string& lambda_text) {
  require_not_csv(cfg.format, "greedy-approx");
  const Rational lambda = Rational::from_string(lambda_text);
  const UnitSeq seq = unitfrac::greedy_approx(lambda);
  if (cfg.format == Format::human) {
    std::cout << seq.to_string() << "\n";
  } else {
    ordered_json j;
    j["lambda"] = lambda.to_string();
    j["denominators"] = seq_json(seq);
    j["sum"] = seq.sum().to_string();
    emit(j);
  }
  return 0;
}

int run_greedy_under(const Config& cfg, const std::string& lambda_text,
                     std::size_t terms) {
  require_not_csv(cfg.format, "greedy-under");
  const Rational lambda = Rational::from_string(lambda_text);
  const UnitSeq seq = unitfrac::greedy_under(lambda, terms, cfg.term_cap);
  if (cfg.format == Format::human) {
    std::cout << seq.to_string() << "\n";
    std::cout << "sum " << seq.sum().to_string() << "\n";
  } else {
    ordered_json j;
    j["lambda"] = lambda.to_string();
    j["denominators"] = seq_json(seq);
    j["sum"] = seq.sum().to_string();
    emit(j);
  }
  return 0;
}

int run_decompose(const Config& cfg, const std::string& lambda_text) {
  require_not_csv(cfg.format, "decompose");
  const Rational lambda = Rational::from_string(lambda_text);
  const unitfrac::GreedyDecomposition d = unitfrac::decompose(lambda);
  if (cfg.format == Format::human) {
    std::cout << "approx " << d.approx_component.to_string() << "\n";
    std::cout << "tail " << d.tail_unit_fraction.to_string() << "\n";
    std::cout << "split " << d.split_index << "\n";
  } else {
    ordered_json j;
    j["lambda"] = lambda.to_string();
    j["approx"] = seq_json(d.approx_component);
    j["tail"] = d.tail_unit_fraction.to_string();
    j["split_index"] = d.split_index;
    emit(j);
  }
  return 0;
}

int run_sylvester(const Config& cfg, const std::string& seed_text,
                  std::size_t terms) {
  require_not_csv(cfg.format, "sylvester");
  const Rational seed = Rational::from_string(seed_text);
  const std::vector<Rational> t = unitfrac::sylvester_terms(seed, terms, cfg.term_cap);
  if (cfg.format == Format::human) {
    std::string line = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) line += ", ";
      line += t[i].to_string();
    }
    std::cout << line << "]\n";
  } else {
    ordered_json j;
    j["seed"] = seed.to_string();
    j["terms"] = rationals_json(t);
    emit(j);
  }
  return 0;
}

int run_construct(const Config& cfg, const std::string& spec_path,
                  bool with_limit) {
  require_not_csv(cfg.format, "construct");
  const unitfrac::SeqSpec a = unitfrac::SeqSpec::from_json(read_spec_text(spec_path));
  const unitfrac::ConstructCaps caps{cfg.term_cap, cfg.claim_cap};
  const unitfrac::ConstructionResult r = unitfrac::build_c(a, caps);
  std::optional<unitfrac::LimitResult> lim;
  if (with_limit) lim = unitfrac::seq_limit(r.c_spec, cfg.digits);
  if (cfg.format == Format::human) {
    std::cout << "m " << r.divergence_m << "\n";
    std::cout << "c " << r.c_spec.to_json() << "\n";
    std::cout << "remainder " << r.remainder_unit_fraction.to_string() << "\n";
    std::cout << "claim1 " << (r.claims.claim1_ok ? "ok" : "FAIL") << "\n";
    std::cout << "claim2 " << (r.claims.claim2_ok ? "ok" : "FAIL") << "\n";
    if (lim) std::cout << "limit " << lim->value.display(cfg.digits) << "\n";
  } else {
    ordered_json j;
    j["divergence_m"] = r.divergence_m;
    j["c_spec"] = ordered_json::parse(r.c_spec.to_json());
    j["remainder"] = r.remainder_unit_fraction.to_string();
    j["claims"] = {{"claim1_ok", r.claims.claim1_ok},
                   {"claim2_ok", r.claims.claim2_ok}};
    if (lim) j["limit"] = limit_json(*lim);
    emit(j);
  }
  if (!r.claims.claim1_ok || !r.claims.claim2_ok) {
    throw Error::verification("construction claims failed");
  }
  return 0;
}

int run_limit(const Config& cfg, const std::string& spec_path) {
  require_not_csv(cfg.format, "limit");
  const unitfrac::SeqSpec s = unitfrac::SeqSpec::from_json(read_spec_text(spec_path));
  const unitfrac::LimitResult lr = unitfrac::seq_limit(s, cfg.digits);
  if (cfg.format == Format::human) {
    std::cout << lr.value.display(cfg.digits) << "\n";
    std::cout << "start " << lr.start_index << ", series terms "
              << lr.series_terms_used << "\n";
  } else {
    emit(limit_json(lr));
  }
  return 0;
}

int run_vardi(const Config& cfg) {
  require_not_csv(cfg.format, "vardi");
  const unitfrac::Ball v = unitfrac::vardi(cfg.digits);
  if (cfg.format == Format::human) {
    std::cout << v.display(cfg.digits) << "\n";
  } else {
    emit(ball_json(v));
  }
  return 0;
}

ordered_json best_under_json(const unitfrac::BestUnderResult& r, bool with_ties) {
  ordered_json j;
  j["lambda"] = r.lambda.to_string();
  j["n"] = r.n;
  j["sum"] = r.optimum_sum.to_string();
  j["witness"] = seq_json(r.canonical_witness);
  if (with_ties) {
    ordered_json ts = ordered_json::array();
    for (const UnitSeq& t : r.ties) ts.push_back(seq_json(t));
    j["ties"] = std::move(ts);
  }
  j["complete"] = r.complete;
  return j;
}

int run_best_under(const Config& cfg, const std::string& lambda_text,
                   std::size_t terms, bool all_ties, bool no_cache) {
  require_not_csv(cfg.format, "best-under");
  const Rational lambda = Rational::from_string(lambda_text);

  std::optional<unitfrac::ResultCache> cache;
  if (!cfg.cache_path.empty() && !no_cache) {
    cache.emplace(cfg.cache_path);
  }

  unitfrac::BestUnderResult result;
  bool from_cache = false;
  if (cache) {
    if (auto hit = cache->lookup(lambda, terms, all_ties)) {
      result = std::move(*hit);
      from_cache = true;
    }
  }
  if (!from_cache) {
    unitfrac::SearchConfig sc;
    sc.node_cap = cfg.node_cap;
    sc.collect_ties = all_ties;
    result = unitfrac::best_under(lambda, terms, sc);
    if (cache && result.complete) cache->append(result, all_ties);
  }

  if (cfg.format == Format::human) {
    std::cout << "witness " << result.canonical_witness.to_string() << "\n";
    std::cout << "sum " << result.optimum_sum.to_string() << "\n";
    if (all_ties) {
      std::cout << "ties " << result.ties.size() << "\n";
      for (const UnitSeq& t : result.ties) {
        std::cout << "  " << t.to_string() << "\n";
      }
    }
    if (!result.complete) {
      std::cout << "incomplete (node cap reached)" << "\n";
    }
  } else {
    emit(best_under_json(result, all_ties));
  }
  return result.complete ? 0 : 3;
}

int run_probe_greedy(const Config& cfg, const std::string& theta_text,
                     std::size_t n_max) {
  const Rational theta = Rational::from_string(theta_text);
  unitfrac::SearchConfig sc;
  sc.node_cap = cfg.node_cap;
  const unitfrac::GreedyProbeReport rep =
      unitfrac::eventually_greedy_probe(theta, n_max, sc);
  if (cfg.format == Format::human) {
    for (const auto& row : rep.per_n) {
      std::cout << "n=" << row.n << " R=" << row.r_n.to_string() << " witness "
                << row.witness.to_string() << " greedy "
                << (row.greedy_extension_of_previous ? "yes" : "no") << "\n";
    }
    if (rep.candidate_n0) {
      std::cout << "candidate n0 " << *rep.candidate_n0 << "\n";
    } else {
      std::cout << "candidate n0 none" << "\n";
    }
  } else if (cfg.format == Format::csv) {
    std::cout << "n,R_n,witness,greedy_extension\n";
    for (const auto& row : rep.per_n) {
      std::cout << row.n << "," << row.r_n.to_string() << ",\""
                << row.witness.to_string() << "\","
                << (row.greedy_extension_of_previous ? "true" : "false")
                << "\n";
    }
  } else {
    ordered_json j;
    j["theta"] = rep.theta.to_string();
    j["n_max"] = rep.n_max;
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.per_n) {
      ordered_json one;
      one["n"] = row.n;
      one["R_n"] = row.r_n.to_string();
      one["witness"] = seq_json(row.witness);
      one["greedy_extension"] = row.greedy_extension_of_previous;
      rows.push_back(std::move(one));
    }
    j["per_n"] = std::move(rows);
    if (rep.candidate_n0) {
      j["candidate_n0"] = *rep.candidate_n0;
    } else {
      j["candidate_n0"] = nullptr;
    }
    emit(j);
  }
  return 0;
}

std::pair<std::size_t, std::size_t> parse_m_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t m = parse_count(text, "m");
    return {m, m};
  }
  const std::size_t lo = parse_count(text.substr(0, dots), "m range start");
  const std::size_t hi = parse_count(text.substr(dots + 2), "m range end");
  if (lo > hi) throw Error::invalid("empty m range");
  return {lo, hi};
}

int run_check_claims(const Config& cfg, const std::string& range_text) {
  require_not_csv(cfg.format, "check-claims");
  const auto [lo, hi] = parse_m_range(range_text);
  const unitfrac::ConstructCaps caps{cfg.term_cap, cfg.claim_cap};
  bool all_ok = true;
  ordered_json rows = ordered_json::array();
  for (std::size_t m = lo; m <= hi; ++m) {
    const bool c1 = unitfrac::verify_claim1(m, caps);
    const bool c2 = unitfrac::verify_claim2(m, caps);
    const Rational rem = unitfrac::claim1_remainder(m, caps);
    all_ok = all_ok && c1 && c2;
    if (cfg.format == Format::human) {
      std::cout << "m=" << m << " claim1 " << (c1 ? "ok" : "FAIL")
                << " claim2 " << (c2 ? "ok" : "FAIL") << " remainder "
                << rem.to_string() << "\n";
    } else {
      ordered_json one;
      one["m"] = m;
      one["claim1_ok"] = c1;
      one["claim2_ok"] = c2;
      one["remainder"] = rem.to_string();
      rows.push_back(std::move(one));
    }
  }
  if (cfg.format != Format::human) emit(rows);
  if (!all_ok) throw Error::verification("a window claim failed");
  return 0;
}

int run_conditions(const Config& cfg, const std::string& fraction_text) {
  require_not_csv(cfg.format, "conditions");
  const Rational pq = Rational::from_string(fraction_text);
  const bool nat = unitfrac::nathanson_condition(pq.num(), pq.den());
  const bool chu = unitfrac::chu_condition(pq.num(), pq.den());
  if (cfg.format == Format::human) {
    std::cout << "nathanson " << (nat ? "true" : "false") << "\n";
    std::cout << "chu " << (chu ? "true" : "false") << "\n";
  } else {
    ordered_json j;
    j["p"] = pq.num().get_str();
    j["q"] = pq.den().get_str();
    j["nathanson"] = nat;
    j["chu"] = chu;
    emit(j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Egyptian-fraction underapproximation toolkit"};
  app.require_subcommand(1);

  ConfigSources sources;
  std::string opt_digits, opt_term_cap, opt_claim_cap, opt_node_cap,
      opt_cache_path, opt_format;
  app.add_option("--digits", opt_digits, "Decimal digits for ball outputs");
  app.add_option("--term-cap", opt_term_cap, "Max terms to materialize");
  app.add_option("--claim-cap", opt_claim_cap, "Max m for window claims");
  app.add_option("--node-cap", opt_node_cap, "Search node budget");
  app.add_option("--cache-path", opt_cache_path, "best-under result cache file");
  app.add_option("--format", opt_format, "Output format: human, json, csv");
  app.add_option("--config", sources.config_file, "JSON config file");

  std::string arg_lambda, arg_seed = "2", arg_spec, arg_m_range = "1..10",
              arg_fraction;
  std::size_t arg_terms = 1, arg_nmax = 3;
  bool flag_all_ties = false, flag_no_cache = false, flag_limit = false;

  CLI::App* c_greedy_approx =
      app.add_subcommand("greedy-approx", "Greedy Egyptian decomposition");
  c_greedy_approx->add_option("lambda", arg_lambda, "Target rational in (0, 1]")
      ->required();

  CLI::App* c_greedy_under =
      app.add_subcommand("greedy-under", "Greedy strict underapproximation");
  c_greedy_under->add_option("lambda", arg_lambda, "Target rational in (0, 1]")
      ->required();
  c_greedy_under->add_option("--terms", arg_terms, "Number of terms")->required();

  CLI::App* c_decompose = app.add_subcommand(
      "decompose", "Split the greedy underapproximation into approx + unit tail");
  c_decompose->add_option("lambda", arg_lambda, "Target rational in (0, 1]")
      ->required();

  CLI::App* c_sylvester =
      app.add_subcommand("sylvester", "Terms of a Sylvester-type sequence");
  c_sylvester->add_option("--seed", arg_seed, "First term (rational >= 2)");
  c_sylvester->add_option("--terms", arg_terms, "Number of terms")->required();

  CLI::App* c_construct = app.add_subcommand(
      "construct", "Comparison sequence for a competitor SeqSpec");
  c_construct->add_option("--spec", arg_spec, "SeqSpec JSON file, or - for stdin")
      ->required();
  c_construct->add_flag("--limit", flag_limit, "Also compute the growth limit");

  CLI::App* c_limit =
      app.add_subcommand("limit", "Growth limit of an eventually Sylvester spec");
  c_limit->add_option("--spec", arg_spec, "SeqSpec JSON file, or - for stdin")
      ->required();

  CLI::App* c_vardi = app.add_subcommand("vardi", "Sylvester growth constant");

  CLI::App* c_best = app.add_subcommand(
      "best-under", "Best n-term underapproximation (exact search)");
  c_best->add_option("lambda", arg_lambda, "Target rational in (0, 1]")->required();
  c_best->add_option("--terms", arg_terms, "Tuple length")->required();
  c_best->add_flag("--all-ties", flag_all_ties, "Collect every optimal tuple");
  c_best->add_flag("--no-cache", flag_no_cache, "Bypass the result cache");

  CLI::App* c_probe = app.add_subcommand(
      "probe-greedy", "Eventual-greediness evidence for small n");
  c_probe->add_option("theta", arg_lambda, "Target rational in (0, 1]")->required();
  c_probe->add_option("--n-max", arg_nmax, "Largest n to probe");

  CLI::App* c_claims =
      app.add_subcommand("check-claims", "Exact window-claim verification");
  c_claims->add_option("--m", arg_m_range, "Single m or range like 1..6");

  CLI::App* c_conditions = app.add_subcommand(
      "conditions", "Divisibility predicates for a reduced fraction p/q");
  c_conditions->add_option("fraction", arg_fraction, "Reduced fraction p/q")
      ->required();

  for (CLI::App* sub :
       {c_greedy_approx, c_greedy_under, c_decompose, c_sylvester, c_construct,
        c_limit, c_vardi, c_best, c_probe, c_claims, c_conditions}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.count("--digits")) sources.digits = opt_digits;
    if (app.count("--term-cap")) sources.term_cap = opt_term_cap;
    if (app.count("--claim-cap")) sources.claim_cap = opt_claim_cap;
    if (app.count("--node-cap")) sources.node_cap = opt_node_cap;
    if (app.count("--cache-path")) sources.cache_path = opt_cache_path;
    if (app.count("--format")) sources.format = opt_format;
    const Config cfg = sources.resolve();

    if (c_greedy_approx->parsed()) return run_greedy_approx(cfg, arg_lambda);
    if (c_greedy_under->parsed()) return run_greedy_under(cfg, arg_lambda, arg_terms);
    if (c_decompose->parsed()) return run_decompose(cfg, arg_lambda);
    if (c_sylvester->parsed()) return run_sylvester(cfg, arg_seed, arg_terms);
    if (c_construct->parsed()) return run_construct(cfg, arg_spec, flag_limit);
    if (c_limit->parsed()) return run_limit(cfg, arg_spec);
    if (c_vardi->parsed()) return run_vardi(cfg);
    if (c_best->parsed()) {
      return run_best_under(cfg, arg_lambda, arg_terms, flag_all_ties, flag_no_cache);
    }
    if (c_probe->parsed()) return run_probe_greedy(cfg, arg_lambda, arg_nmax);
    if (c_claims->parsed()) return run_check_claims(cfg, arg_m_range);
    if (c_conditions->parsed()) return run_conditions(cfg, arg_fraction);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case Error::Kind::invalid_input:
        return 2;
      case Error::Kind::cap_exceeded:
        return 3;
      case Error::Kind::verification:
        return 4;
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
