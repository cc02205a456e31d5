#include "unitfrac/rational.hpp"

#include <cctype>

namespace unitfrac {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
  std::size_t start = 0;
  if (!s.empty() && s[0] == '-') start = 1;
  std::size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(s, start, s.size());
  } else {
    ok = all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
  }
  if (!ok) throw Error::invalid("malformed rational: \"" + s + "\"");
  BigInt num(slash == std::string::npos ? s : s.substr(0, slash));
  BigInt den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
  if (den == 0) throw Error::invalid("malformed rational (zero denominator): \"" + s + "\"");
  return Rational(num, den);
}

BigInt bigint_from_string(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (!all_digits(s, start, s.size())) {
    throw Error::invalid("malformed integer: \"" + s + "\"");
  }
  return BigInt(s);
}

}  // namespace unitfrac
