#pragma once

#include <gmpxx.h>

#include <string>

#include "unitfrac/error.hpp"

namespace unitfrac {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Construction canonicalizes eagerly so equality, hashing of the
// string form, and serialization are all canonical by construction.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integers
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error::invalid("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p" or "p/q" with an optional leading '-' on p; no whitespace.
  static Rational from_string(const std::string& s);
  std::string to_string() const { return v_.get_str(); }

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_integer() const { return den() == 1; }
  bool is_unit_fraction() const { return num() == 1; }

  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
  }
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
  }
  Rational reciprocal() const {
    if (is_zero()) throw Error::invalid("reciprocal of zero");
    return Rational(den(), num());
  }
  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error::invalid("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Raw mpq access for MPFR interop; const, so canonicity is preserved.
  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

// Strict decimal-integer parse ("-123" allowed, nothing else).
BigInt bigint_from_string(const std::string& s);

}  // namespace unitfrac
