#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "unitfrac/error.hpp"
#include "unitfrac/rational.hpp"

namespace unitfrac {

namespace detail {

// Minimal RAII wrapper for mpfr_t with value semantics.
class MpfrFloat {
public:
  explicit MpfrFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  MpfrFloat(const MpfrFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpfrFloat(MpfrFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpfrFloat& operator=(const MpfrFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpfrFloat& operator=(MpfrFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpfrFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

private:
  mpfr_t v_;
};

}  // namespace detail

// Midpoint-radius real: the true value is guaranteed to lie in
// [mid - rad, mid + rad]. The midpoint carries the declared precision; the
// radius is a separate 64-bit float manipulated exclusively with upward
// rounding, so every operation is a rigorous enclosure. Midpoint rounding
// error (half an ulp per inexact operation, signalled by the MPFR ternary
// value) is folded into the radius.
//
// Values are immutable after construction and safe to share across threads.
class Ball {
public:
  static constexpr mpfr_prec_t kRadPrec = 64;
  static constexpr mpfr_prec_t kMinPrec = 8;

  Ball() : Ball(kMinPrec) {}

  static Ball from_rational(const Rational& q, mpfr_prec_t bits);
  static Ball from_integer(long v, mpfr_prec_t bits);
  // Ball spanning exactly [lo, hi].
  static Ball from_interval(const Rational& lo, const Rational& hi, mpfr_prec_t bits);

  mpfr_prec_t bits() const { return mpfr_get_prec(mid_.get()); }
  bool radius_zero() const { return mpfr_zero_p(rad_.get()); }

  // Exact dyadic extraction; enables exact rational comparisons downstream.
  Rational midpoint() const;
  Rational radius() const;
  Rational lower() const { return midpoint() - radius(); }
  Rational upper() const { return midpoint() + radius(); }

  bool contains(const Rational& q) const { return lower() <= q && q <= upper(); }
  bool nested_in(const Ball& outer) const {
    return outer.lower() <= lower() && upper() <= outer.upper();
  }
  bool overlaps(const Ball& o) const {
    return lower() <= o.upper() && o.lower() <= upper();
  }

  // Decimal serialization. mid_string round-trips the midpoint exactly at
  // this precision; rad_string is an upper bound of the radius (21
  // significant digits, rounded upward), so parse(serialize(ball)) is a
  // superset of ball within one ulp of the radius.
  std::string mid_string() const;
  std::string rad_string() const;
  std::string to_json() const;
  static Ball from_strings(const std::string& mid, const std::string& rad,
                           mpfr_prec_t bits);
  static Ball from_json(const std::string& json_text);

  // Presentation-only fixed-point rendering of the midpoint.
  std::string decimal(unsigned digits) const;
  // "1.264085 ± 1e-6" style; requires radius ≤ 10^-digits (verified).
  std::string display(unsigned digits) const;

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a);
  friend Ball recip(const Ball& a);
  friend Ball log(const Ball& a);
  friend Ball exp(const Ball& a);
  friend Ball log1p(const Ball& a);
  // Exact scaling by 2^k.
  friend Ball mul_2si(const Ball& a, long k);

  // True iff every point of a is strictly below every point of b (exact).
  friend bool strictly_below(const Ball& a, const Ball& b) {
    return a.upper() < b.lower();
  }

private:
  explicit Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}
  static mpfr_prec_t check_prec(mpfr_prec_t bits);
  // Adds half an ulp of the midpoint to the radius when ternary != 0.
  void absorb_rounding(int ternary);
  void require_finite() const;

  detail::MpfrFloat mid_;
  detail::MpfrFloat rad_;
};

}  // namespace unitfrac
