#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unitfrac/error.hpp"
#include "unitfrac/rational.hpp"

namespace unitfrac {

// Finite non-decreasing sequence of positive integer denominators with
// cached exact partial sums of reciprocals. Immutable except for push_back.
class UnitSeq {
public:
  UnitSeq() = default;
  static UnitSeq from_denominators(std::vector<BigInt> dens) {
    UnitSeq s;
    for (auto& d : dens) s.push_back(d);
    return s;
  }

  void push_back(const BigInt& d) {
    if (d <= 0) throw Error::invalid("unit-fraction denominator must be positive");
    if (!dens_.empty() && d < dens_.back()) {
      throw Error::invalid("denominators must be non-decreasing");
    }
    dens_.push_back(d);
    Rational next = sum() + Rational(BigInt(1), d);
    partials_.push_back(next);
  }

  std::size_t size() const { return dens_.size(); }
  bool empty() const { return dens_.empty(); }

  // 1-based access, matching the index conventions used throughout.
  const BigInt& denominator(std::size_t i) const {
    check_index(i);
    return dens_[i - 1];
  }
  const Rational& partial_sum(std::size_t i) const {
    check_index(i);
    return partials_[i - 1];
  }
  Rational sum() const { return partials_.empty() ? Rational(0) : partials_.back(); }

  const std::vector<BigInt>& denominators() const { return dens_; }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < dens_.size(); ++i) {
      if (i) out += ", ";
      out += dens_[i].get_str();
    }
    return out + "]";
  }

  friend bool operator==(const UnitSeq& a, const UnitSeq& b) {
    return a.dens_ == b.dens_;
  }
  friend bool operator!=(const UnitSeq& a, const UnitSeq& b) { return !(a == b); }

private:
  void check_index(std::size_t i) const {
    if (i < 1 || i > dens_.size()) throw Error::invalid("sequence index out of range");
  }

  std::vector<BigInt> dens_;
  std::vector<Rational> partials_;
};

}  // namespace unitfrac
