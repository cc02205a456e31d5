#include "unitfrac/seqspec.hpp"

#include <json.hpp>

namespace unitfrac {

namespace {

Rational sum_of_reciprocals(const std::vector<Rational>& terms) {
  Rational s(0);
  for (const auto& t : terms) s += t.reciprocal();
  return s;
}

}  // namespace

SeqSpec::SeqSpec(std::vector<Rational> prefix, Tail tail,
                 std::optional<Rational> target)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  const Rational two(2);
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] < two) throw Error::invalid("sequence terms must be >= 2");
    if (i > 0 && prefix_[i] < prefix_[i - 1]) {
      throw Error::invalid("sequence prefix must be non-decreasing");
    }
  }

  Rational psum = sum_of_reciprocals(prefix_);
  if (const auto* syl = std::get_if<SylvesterTail>(&tail_)) {
    if (syl->from_index < 1 || syl->from_index > prefix_.size()) {
      throw Error::invalid("sylvester tail must start inside the prefix");
    }
    for (std::size_t n = syl->from_index; n < prefix_.size(); ++n) {
      const Rational& c = prefix_[n - 1];
      if (prefix_[n] != c * c - c + Rational(1)) {
        throw Error::invalid("sylvester recurrence violated inside the prefix");
      }
    }
    // Terms beyond the prefix telescope: sum_{i>P} 1/c_i = 1/(c_P (c_P - 1)).
    const Rational& last = prefix_.back();
    target_ = psum + (last * (last - Rational(1))).reciprocal();
  } else if (const auto* g = std::get_if<GreedyUnderTail>(&tail_)) {
    if (!g->remaining.is_positive()) {
      throw Error::invalid("greedy tail requires positive remaining mass");
    }
    for (const auto& t : prefix_) {
      if (!t.is_integer()) throw Error::invalid("greedy tail requires an integer prefix");
    }
    target_ = psum + g->remaining;
  } else {
    target_ = psum;
  }

  if (target.has_value() && *target != target_) {
    throw Error::invalid("declared target " + target->to_string() +
                         " does not match the exact sum " + target_.to_string());
  }
}

Rational SeqSpec::prefix_sum() const { return sum_of_reciprocals(prefix_); }

std::vector<Rational> SeqSpec::materialize(std::size_t count,
                                           std::size_t term_cap) const {
  if (count > term_cap) {
    throw Error::cap("materializing " + std::to_string(count) +
                     " terms exceeds the term cap " + std::to_string(term_cap));
  }
  std::vector<Rational> out(prefix_.begin(),
                            prefix_.begin() +
                                static_cast<std::ptrdiff_t>(
                                    std::min(count, prefix_.size())));
  if (out.size() == count) return out;

  if (is_finite()) {
    throw Error::invalid("finite sequence has only " +
                         std::to_string(prefix_.size()) + " terms");
  }
  if (has_sylvester_tail()) {
    Rational t = prefix_.back();
    while (out.size() < count) {
      t = t * t - t + Rational(1);
      out.push_back(t);
    }
    return out;
  }

  const auto& g = std::get<GreedyUnderTail>(tail_);
  Rational r = g.remaining;
  BigInt prev = prefix_.empty() ? BigInt(1) : prefix_.back().num();
  while (out.size() < count) {
    BigInt x = r.reciprocal().floor() + 1;
    if (x <= prev) x = prev + 1;
    out.push_back(Rational(x));
    r -= Rational(BigInt(1), x);
    if (!r.is_positive()) {
      throw Error::verification("greedy tail remainder became nonpositive");
    }
    prev = x;
  }
  return out;
}

Rational SeqSpec::term(std::size_t i, std::size_t term_cap) const {
  if (i < 1) throw Error::invalid("sequence index is 1-based");
  if (i <= prefix_.size()) return prefix_[i - 1];
  return materialize(i, term_cap).back();
}

std::string SeqSpec::to_json() const {
  nlohmann::ordered_json j;
  auto& pre = j["prefix"] = nlohmann::ordered_json::array();
  for (const auto& t : prefix_) pre.push_back(t.to_string());
  if (const auto* syl = std::get_if<SylvesterTail>(&tail_)) {
    j["tail"] = {{"kind", "sylvester"}, {"from", syl->from_index}};
  } else if (const auto* g = std::get_if<GreedyUnderTail>(&tail_)) {
    j["tail"] = {{"kind", "greedy_under"}, {"target", g->remaining.to_string()}};
  } else {
    j["tail"] = {{"kind", "none"}};
  }
  j["target"] = target_.to_string();
  return j.dump();
}

SeqSpec SeqSpec::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error::invalid(std::string("malformed sequence JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("prefix") || !j["prefix"].is_array() ||
      !j.contains("tail") || !j["tail"].is_object() ||
      !j["tail"].contains("kind") || !j["tail"]["kind"].is_string()) {
    throw Error::invalid("sequence JSON must have a prefix array and a tail rule");
  }
  std::vector<Rational> prefix;
  for (const auto& item : j["prefix"]) {
    if (!item.is_string()) throw Error::invalid("prefix terms must be \"p/q\" strings");
    prefix.push_back(Rational::from_string(item.get<std::string>()));
  }
  const auto& jt = j["tail"];
  std::string kind = jt["kind"].get<std::string>();
  Tail tail;
  if (kind == "sylvester") {
    if (!jt.contains("from") || !jt["from"].is_number_integer() ||
        jt["from"].get<long>() < 1) {
      throw Error::invalid("sylvester tail needs a positive \"from\" index");
    }
    tail = SylvesterTail{static_cast<std::size_t>(jt["from"].get<long>())};
  } else if (kind == "greedy_under") {
    if (!jt.contains("target") || !jt["target"].is_string()) {
      throw Error::invalid("greedy_under tail needs a \"target\" rational");
    }
    tail = GreedyUnderTail{Rational::from_string(jt["target"].get<std::string>())};
  } else if (kind == "none") {
    tail = NoTail{};
  } else {
    throw Error::invalid("unknown tail kind \"" + kind + "\"");
  }
  std::optional<Rational> target;
  if (j.contains("target")) {
    if (!j["target"].is_string()) throw Error::invalid("target must be a \"p/q\" string");
    target = Rational::from_string(j["target"].get<std::string>());
  }
  return SeqSpec(std::move(prefix), std::move(tail), std::move(target));
}

}  // namespace unitfrac
