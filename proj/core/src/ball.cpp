#include "unitfrac/ball.hpp"

#include <json.hpp>

#include <cstdio>
#include <vector>

namespace unitfrac {

namespace {

// 64-bit scratch initialized to zero.
detail::MpfrFloat scratch() { return detail::MpfrFloat(Ball::kRadPrec); }

std::string format_mpfr(const char* fmt, int digits, mpfr_rnd_t rnd, mpfr_srcptr x) {
  int len = mpfr_snprintf(nullptr, 0, fmt, digits, rnd, x);
  if (len < 0) throw Error::verification("mpfr formatting failed");
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt, digits, rnd, x);
  return std::string(buf.data());
}

}  // namespace

mpfr_prec_t Ball::check_prec(mpfr_prec_t bits) {
  if (bits < kMinPrec) throw Error::invalid("ball precision below 8 bits");
  return bits;
}

void Ball::require_finite() const {
  if (!mpfr_number_p(mid_.get()) || !mpfr_number_p(rad_.get()) ||
      mpfr_sgn(rad_.get()) < 0) {
    throw Error::invalid("ball operation produced a non-finite enclosure");
  }
}

void Ball::absorb_rounding(int ternary) {
  if (ternary == 0) return;
  if (mpfr_zero_p(mid_.get()) || !mpfr_number_p(mid_.get())) {
    throw Error::verification("inexact rounding with degenerate midpoint");
  }
  // |true - mid| <= 2^(exp - prec - 1) for a round-to-nearest result.
  detail::MpfrFloat ulp = scratch();
  mpfr_exp_t e = mpfr_get_exp(mid_.get());
  mpfr_set_ui_2exp(ulp.get(), 1, e - bits() - 1, MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

Ball Ball::from_rational(const Rational& q, mpfr_prec_t bits) {
  Ball b(check_prec(bits));
  int t = mpfr_set_q(b.mid_.get(), q.raw().get_mpq_t(), MPFR_RNDN);
  b.absorb_rounding(t);
  b.require_finite();
  return b;
}

Ball Ball::from_integer(long v, mpfr_prec_t bits) {
  Ball b(check_prec(bits));
  int t = mpfr_set_si(b.mid_.get(), v, MPFR_RNDN);
  b.absorb_rounding(t);
  return b;
}

Ball Ball::from_interval(const Rational& lo, const Rational& hi, mpfr_prec_t bits) {
  if (lo > hi) throw Error::invalid("interval with lo > hi");
  Ball b(check_prec(bits));
  Rational mid = (lo + hi) / Rational(2);
  Rational half = (hi - lo) / Rational(2);
  int t = mpfr_set_q(b.mid_.get(), mid.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(b.rad_.get(), half.raw().get_mpq_t(), MPFR_RNDU);
  b.absorb_rounding(t);
  b.require_finite();
  return b;
}

Rational Ball::midpoint() const {
  require_finite();
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), mid_.get());
  return Rational(q.get_num(), q.get_den());
}

Rational Ball::radius() const {
  require_finite();
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), rad_.get());
  return Rational(q.get_num(), q.get_den());
}

std::string Ball::mid_string() const {
  require_finite();
  // ceil(bits * log10(2)) + 2 significant digits round-trip the midpoint.
  int digits = static_cast<int>((static_cast<long>(bits()) * 30103) / 100000) + 3;
  return format_mpfr("%.*R*e", digits - 1, MPFR_RNDN, mid_.get());
}

std::string Ball::rad_string() const {
  require_finite();
  if (radius_zero()) return "0";
  // Upward-rounded print keeps the serialized radius an upper bound.
  return format_mpfr("%.*R*e", 20, MPFR_RNDU, rad_.get());
}

Ball Ball::from_strings(const std::string& mid, const std::string& rad,
                        mpfr_prec_t bits) {
  Ball b(check_prec(bits));
  char* end = nullptr;
  int t = mpfr_strtofr(b.mid_.get(), mid.c_str(), &end, 10, MPFR_RNDN);
  if (mid.empty() || end != mid.c_str() + mid.size()) {
    throw Error::invalid("malformed ball midpoint: \"" + mid + "\"");
  }
  mpfr_strtofr(b.rad_.get(), rad.c_str(), &end, 10, MPFR_RNDU);
  if (rad.empty() || end != rad.c_str() + rad.size()) {
    throw Error::invalid("malformed ball radius: \"" + rad + "\"");
  }
  if (mpfr_sgn(b.rad_.get()) < 0) throw Error::invalid("negative ball radius");
  b.absorb_rounding(t);
  b.require_finite();
  return b;
}

std::string Ball::to_json() const {
  nlohmann::ordered_json j;
  j["mid"] = mid_string();
  j["rad"] = rad_string();
  j["bits"] = static_cast<long>(bits());
  return j.dump();
}

Ball Ball::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error::invalid(std::string("malformed ball JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("mid") || !j.contains("rad") ||
      !j.contains("bits") || !j["mid"].is_string() || !j["rad"].is_string() ||
      !j["bits"].is_number_integer()) {
    throw Error::invalid("ball JSON must be {\"mid\": str, \"rad\": str, \"bits\": int}");
  }
  return from_strings(j["mid"].get<std::string>(), j["rad"].get<std::string>(),
                      static_cast<mpfr_prec_t>(j["bits"].get<long>()));
}

std::string Ball::decimal(unsigned digits) const {
  require_finite();
  return format_mpfr("%.*R*f", static_cast<int>(digits), MPFR_RNDN, mid_.get());
}

std::string Ball::display(unsigned digits) const {
  BigInt p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
  if (radius() > Rational(BigInt(1), p10)) {
    throw Error::verification("ball radius exceeds the displayed 1e-" +
                              std::to_string(digits) + " bound");
  }
  return decimal(digits) + " ± 1e-" + std::to_string(digits);
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball out(std::max(a.bits(), b.bits()));
  int t = mpfr_add(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball out(std::max(a.bits(), b.bits()));
  int t = mpfr_sub(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

Ball operator-(const Ball& a) {
  Ball out = a;
  mpfr_neg(out.mid_.get(), out.mid_.get(), MPFR_RNDN);
  return out;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball out(std::max(a.bits(), b.bits()));
  int t = mpfr_mul(out.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // |am|*rb + |bm|*ra + ra*rb, every step rounded upward.
  detail::MpfrFloat am = scratch(), bm = scratch(), t1 = scratch(),
                    t2 = scratch(), t3 = scratch();
  mpfr_abs(am.get(), a.mid_.get(), MPFR_RNDU);
  mpfr_abs(bm.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_mul(t1.get(), am.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_mul(t2.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_mul(t3.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_add(out.rad_.get(), t1.get(), t2.get(), MPFR_RNDU);
  mpfr_add(out.rad_.get(), out.rad_.get(), t3.get(), MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

Ball recip(const Ball& a) {
  // Rigorous lower bound of |x| over the interval.
  detail::MpfrFloat am = scratch(), lo = scratch(), lo2 = scratch();
  mpfr_abs(am.get(), a.mid_.get(), MPFR_RNDD);
  mpfr_sub(lo.get(), am.get(), a.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(lo.get()) <= 0) {
    throw Error::invalid("reciprocal of an interval containing zero");
  }
  Ball out(a.bits());
  int t = mpfr_ui_div(out.mid_.get(), 1, a.mid_.get(), MPFR_RNDN);
  mpfr_sqr(lo2.get(), lo.get(), MPFR_RNDD);
  mpfr_div(out.rad_.get(), a.rad_.get(), lo2.get(), MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

Ball operator/(const Ball& a, const Ball& b) { return a * recip(b); }

Ball log(const Ball& a) {
  detail::MpfrFloat md = scratch(), lo = scratch();
  mpfr_set(md.get(), a.mid_.get(), MPFR_RNDD);
  mpfr_sub(lo.get(), md.get(), a.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(lo.get()) <= 0) {
    throw Error::invalid("log of an interval touching zero");
  }
  Ball out(a.bits());
  int t = mpfr_log(out.mid_.get(), a.mid_.get(), MPFR_RNDN);
  // |log'| = 1/x <= 1/lo over the interval.
  mpfr_div(out.rad_.get(), a.rad_.get(), lo.get(), MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

Ball log1p(const Ball& a) {
  detail::MpfrFloat md = scratch(), lo = scratch(), lo1 = scratch();
  mpfr_set(md.get(), a.mid_.get(), MPFR_RNDD);
  mpfr_sub(lo.get(), md.get(), a.rad_.get(), MPFR_RNDD);
  mpfr_add_ui(lo1.get(), lo.get(), 1, MPFR_RNDD);
  if (mpfr_sgn(lo1.get()) <= 0) {
    throw Error::invalid("log1p of an interval touching -1");
  }
  Ball out(a.bits());
  int t = mpfr_log1p(out.mid_.get(), a.mid_.get(), MPFR_RNDN);
  mpfr_div(out.rad_.get(), a.rad_.get(), lo1.get(), MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

Ball exp(const Ball& a) {
  detail::MpfrFloat mu = scratch(), hi = scratch(), fac = scratch();
  mpfr_set(mu.get(), a.mid_.get(), MPFR_RNDU);
  mpfr_add(hi.get(), mu.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_exp(fac.get(), hi.get(), MPFR_RNDU);
  Ball out(a.bits());
  int t = mpfr_exp(out.mid_.get(), a.mid_.get(), MPFR_RNDN);
  // |exp'| <= exp(hi) over the interval.
  mpfr_mul(out.rad_.get(), a.rad_.get(), fac.get(), MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

Ball mul_2si(const Ball& a, long k) {
  Ball out(a.bits());
  int t = mpfr_mul_2si(out.mid_.get(), a.mid_.get(), k, MPFR_RNDN);
  mpfr_mul_2si(out.rad_.get(), a.rad_.get(), k, MPFR_RNDU);
  out.absorb_rounding(t);
  out.require_finite();
  return out;
}

}  // namespace unitfrac
