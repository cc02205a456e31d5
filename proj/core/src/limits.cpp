#include "unitfrac/limits.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cstddef>
#include <string>
#include <variant>

#include "unitfrac/error.hpp"

namespace unitfrac {

namespace {

// A shade over log2(10) bits per decimal digit, plus guard bits.
mpfr_prec_t working_prec(unsigned digits) {
  unsigned long d = digits;
  return static_cast<mpfr_prec_t>(64 + (d * 3322 + 999) / 1000);
}

Rational pow10_inv(unsigned k) {
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, k);
  return Rational(BigInt(1), d);
}

std::size_t rational_bits(const Rational& q) {
  return mpz_sizeinbase(q.num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.den().get_mpz_t(), 2);
}

void check_digits(unsigned digits, unsigned max_digits) {
  if (digits == 0) throw Error::invalid("digits must be positive");
  if (digits > max_digits) {
    throw Error::cap("requested " + std::to_string(digits) +
                     " digits, configured max is " + std::to_string(max_digits));
  }
}

}  // namespace

LimitResult seq_limit(const SeqSpec& s, unsigned digits, const LimitsConfig& cfg) {
  check_digits(digits, cfg.max_digits);
  const auto* tail = std::get_if<SylvesterTail>(&s.tail());
  if (tail == nullptr) {
    throw Error::invalid("sequence limit needs a Sylvester-recurrence tail");
  }
  const std::size_t N = tail->from_index;
  const Rational cN = s.prefix()[N - 1];
  if (cN < Rational(2)) {
    throw Error::invalid("term at the recurrence start must be >= 2");
  }

  const std::size_t bit_cutoff = cfg.exact_bits_override != 0
                                     ? cfg.exact_bits_override
                                     : static_cast<std::size_t>(64) * digits;
  const Rational stop = pow10_inv(digits + 2);
  const Rational want = pow10_inv(digits);

  mpfr_prec_t prec = working_prec(digits);
  for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
    // z_n = c_n - 1/2 satisfies z_{n+1} = z_n^2 + 1/4, and the series
    // increment log(1 + 1/(4 z_n^2)) doubles as the log-domain advance:
    // log z_{n+1} = 2 log z_n + log(1 + 1/(4 z_n^2)).
    Rational z = cN - Rational(1, 2);
    Ball J = mul_2si(log(Ball::from_rational(z, prec)), -static_cast<long>(N));
    bool log_domain = rational_bits(z) > bit_cutoff;
    Ball logz;
    if (log_domain) logz = log(Ball::from_rational(z, prec));

    std::size_t n = N;
    std::size_t used = 0;
    Ball tail_iv;
    while (true) {
      Ball lp;
      if (log_domain) {
        Ball q = mul_2si(exp(mul_2si(-logz, 1)), -2);
        lp = log1p(q);
      } else {
        Rational q = (z * z * Rational(4)).reciprocal();
        lp = log1p(Ball::from_rational(q, prec));
      }
      if (used >= 1) {
        // The increments shrink as z grows, so the whole remaining tail is
        // dominated by a geometric series anchored at the current term.
        Rational b = mul_2si(lp, -static_cast<long>(n)).upper();
        if (b < stop) {
          tail_iv = Ball::from_interval(Rational(0), b, prec);
          break;
        }
      }
      J = J + mul_2si(lp, -static_cast<long>(n) - 1);
      ++used;
      if (log_domain) {
        logz = mul_2si(logz, 1) + lp;
      } else {
        z = z * z + Rational(1, 4);
        if (rational_bits(z) > bit_cutoff) {
          logz = log(Ball::from_rational(z, prec));
          log_domain = true;
        }
      }
      ++n;
      if (used > 100000) throw Error::verification("limit series did not converge");
    }
    J = J + tail_iv;
    Ball value = exp(J);
    if (value.radius() <= want) return LimitResult{value, N, used, tail_iv};
  }
  throw Error::verification("could not certify the requested radius");
}

Ball direct_estimate(const SeqSpec& s, std::size_t n, unsigned digits,
                     const LimitsConfig& cfg) {
  check_digits(digits, cfg.max_digits);
  if (n == 0) throw Error::invalid("index must be positive");
  const Rational t = s.term(n, cfg.term_cap);
  const mpfr_prec_t prec = working_prec(digits);
  return exp(mul_2si(log(Ball::from_rational(t, prec)), -static_cast<long>(n)));
}

Ball f_eval(const Rational& x, unsigned digits, const LimitsConfig& cfg) {
  check_digits(digits, cfg.max_digits);
  if (x < Rational(3)) throw Error::invalid("f is only certified for x >= 3");

  const std::size_t bit_cutoff = cfg.exact_bits_override != 0
                                     ? cfg.exact_bits_override
                                     : static_cast<std::size_t>(64) * digits;
  const Rational stop = pow10_inv(digits + 2);
  const Rational want = pow10_inv(digits);

  mpfr_prec_t prec = working_prec(digits);
  for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
    // a_{j+1} = (a_j^2 + 1)/2; the series increment log(1 + 1/a_j^2) again
    // doubles as the advance: log a_{j+1} = 2 log a_j + log(1 + 1/a_j^2) - log 2.
    const Ball log2b = log(Ball::from_integer(2, prec));
    Rational a = x;
    Ball F = log(Ball::from_rational(a, prec));
    bool log_domain = rational_bits(a) > bit_cutoff;
    Ball loga;
    if (log_domain) loga = log(Ball::from_rational(a, prec));

    std::size_t j = 1;
    Ball tail_iv;
    while (true) {
      Ball lp;
      if (log_domain) {
        lp = log1p(exp(mul_2si(-loga, 1)));
      } else {
        Rational q = (a * a).reciprocal();
        lp = log1p(Ball::from_rational(q, prec));
      }
      if (j > 1) {
        Rational b = mul_2si(lp, -static_cast<long>(j) + 1).upper();
        if (b < stop) {
          tail_iv = Ball::from_interval(Rational(0), b, prec);
          break;
        }
      }
      F = F + mul_2si(lp, -static_cast<long>(j));
      if (log_domain) {
        loga = (mul_2si(loga, 1) + lp) - log2b;
      } else {
        a = (a * a + Rational(1)) / Rational(2);
        if (rational_bits(a) > bit_cutoff) {
          loga = log(Ball::from_rational(a, prec));
          log_domain = true;
        }
      }
      ++j;
      if (j > 100000) throw Error::verification("f series did not converge");
    }
    F = F + tail_iv;
    if (F.radius() <= want) return F;
  }
  throw Error::verification("could not certify the requested radius");
}

Rational h_j_exact(unsigned j, const Rational& x) {
  if (j == 0 || j > 30) throw Error::invalid("h_j needs j in [1, 30]");
  if (x < Rational(3)) throw Error::invalid("h_j is only defined for x >= 3");
  Rational g = x;
  Rational prod(1);
  for (unsigned k = 0; k < j; ++k) {
    prod *= g;
    g = (g * g + Rational(1)) / Rational(2);
  }
  return (Rational(2) * x).reciprocal() - prod / (g * g * g + g);
}

Ball h_j_eval(unsigned j, const Rational& x, unsigned digits) {
  check_digits(digits, kMaxDigits);
  return Ball::from_rational(h_j_exact(j, x), working_prec(digits));
}

Ball vardi(unsigned digits, const LimitsConfig& cfg) {
  return seq_limit(sylvester_growth_spec(), digits, cfg).value;
}

SeqSpec sylvester_growth_spec() {
  return SeqSpec({Rational(2)}, SylvesterTail{1}, Rational(1));
}

}  // namespace unitfrac
