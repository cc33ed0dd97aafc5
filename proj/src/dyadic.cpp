#include "pcurv/dyadic.hpp"

#include <stdexcept>

#include "pcurv/errors.hpp"

namespace pcurv {

namespace {

// Number of bits in |m| (0 for m == 0).
std::size_t bit_length(const Integer& m) {
  if (m == 0) return 0;
  return mpz_sizeinbase(m.get_mpz_t(), 2);
}

// Strip trailing zero bits of the mantissa into the exponent.
void normalize(Integer& mant, long& exp) {
  if (mant == 0) {
    exp = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(mant.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mant.get_mpz_t(), mant.get_mpz_t(), tz);
    exp += static_cast<long>(tz);
  }
}

Integer shl(const Integer& m, unsigned long k) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), k);
  return r;
}

}  // namespace

Dyadic::Dyadic(const Integer& m, long e) : mant(m), exp(e) {
  if (mant < 0) throw std::invalid_argument("Dyadic: negative mantissa");
  normalize(mant, exp);
}

Rational Dyadic::to_rational() const {
  Rational r(mant);
  if (exp >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(),
                 static_cast<unsigned long>(exp));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(),
                 static_cast<unsigned long>(-exp));
  }
  r.canonicalize();
  return r;
}

std::string Dyadic::str() const { return to_string(to_rational()); }

int cmp(const Dyadic& a, const Dyadic& b) {
  if (a.mant == 0) return (b.mant == 0) ? 0 : -1;
  if (b.mant == 0) return 1;
  // Cheap magnitude test first: the values live in disjoint binades.
  const long atop = a.exp + static_cast<long>(bit_length(a.mant));
  const long btop = b.exp + static_cast<long>(bit_length(b.mant));
  if (atop < btop) return -1;
  if (atop > btop) return 1;
  // Same binade: align exponents (gap is at most the mantissa widths).
  int s;
  if (a.exp <= b.exp) {
    const Integer bs = shl(b.mant, static_cast<unsigned long>(b.exp - a.exp));
    s = ::cmp(a.mant, bs);
  } else {
    const Integer as = shl(a.mant, static_cast<unsigned long>(a.exp - b.exp));
    s = ::cmp(as, b.mant);
  }
  return (s > 0) - (s < 0);
}

Dyadic round_up_bits(const Dyadic& a, unsigned prec) {
  const std::size_t len = bit_length(a.mant);
  if (len <= prec) return a;
  const unsigned long drop = static_cast<unsigned long>(len - prec);
  Integer m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), a.mant.get_mpz_t(), drop);
  return Dyadic(m, a.exp + static_cast<long>(drop));
}

Dyadic round_down_bits(const Dyadic& a, unsigned prec) {
  const std::size_t len = bit_length(a.mant);
  if (len <= prec) return a;
  const unsigned long drop = static_cast<unsigned long>(len - prec);
  Integer m;
  mpz_fdiv_q_2exp(m.get_mpz_t(), a.mant.get_mpz_t(), drop);
  return Dyadic(m, a.exp + static_cast<long>(drop));
}

Dyadic mul_up(const Dyadic& a, const Dyadic& b, unsigned prec) {
  Dyadic r;
  r.mant = a.mant * b.mant;
  r.exp = a.exp + b.exp;
  normalize(r.mant, r.exp);
  return round_up_bits(r, prec);
}

Dyadic add_up(const Dyadic& a, const Dyadic& b, unsigned prec) {
  if (a.mant == 0) return round_up_bits(b, prec);
  if (b.mant == 0) return round_up_bits(a, prec);
  const Dyadic& hi = (cmp(a, b) >= 0) ? a : b;
  const Dyadic& lo = (&hi == &a) ? b : a;
  const long hi_top = hi.exp + static_cast<long>(bit_length(hi.mant));
  const long lo_top = lo.exp + static_cast<long>(bit_length(lo.mant));
  // When the smaller addend is far below the rounding granularity of the
  // larger one, skip the (potentially enormous) alignment shift: rounding
  // the larger addend up to prec bits and bumping its last ulp dominates
  // the exact sum.
  if (hi_top - lo_top > static_cast<long>(prec) + 4) {
    Dyadic r = round_up_bits(hi, prec);
    r.mant += 1;
    long e = r.exp;
    normalize(r.mant, e);
    r.exp = e;
    return round_up_bits(r, prec);
  }
  Dyadic r;
  if (hi.exp <= lo.exp) {
    r.mant = hi.mant + shl(lo.mant, static_cast<unsigned long>(lo.exp - hi.exp));
    r.exp = hi.exp;
  } else {
    r.mant = shl(hi.mant, static_cast<unsigned long>(hi.exp - lo.exp)) + lo.mant;
    r.exp = lo.exp;
  }
  normalize(r.mant, r.exp);
  return round_up_bits(r, prec);
}

Dyadic square_down(const Dyadic& a, unsigned prec) {
  Dyadic r;
  r.mant = a.mant * a.mant;
  r.exp = 2 * a.exp;
  normalize(r.mant, r.exp);
  return round_down_bits(r, prec);
}

Dyadic div_up(const Dyadic& a, const Dyadic& b_low, unsigned prec) {
  if (b_low.mant <= 0) throw std::invalid_argument("div_up: denominator <= 0");
  if (a.mant == 0) return Dyadic();
  // Give the quotient ~prec significant bits before the ceiling division.
  const long la = static_cast<long>(bit_length(a.mant));
  const long lb = static_cast<long>(bit_length(b_low.mant));
  unsigned long shift = prec;
  if (lb > la) shift += static_cast<unsigned long>(lb - la);
  Integer q;
  const Integer num = shl(a.mant, shift);
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b_low.mant.get_mpz_t());
  return Dyadic(q, a.exp - b_low.exp - static_cast<long>(shift));
}

Dyadic root_up(const Dyadic& a, unsigned long k, unsigned frac_bits) {
  if (k == 0) throw std::invalid_argument("root_up: k == 0");
  if (a.mant == 0) return Dyadic();
  if (k == 1) return a;
  // Keep the radicand mantissa small: rounding it up first preserves the
  // upper-bound direction of the final result.
  const Dyadic ar = round_up_bits(a, frac_bits + 64);
  // Split the exponent as e = k*q + r0 (0 <= r0 < k) so that
  //   a^(1/k) = (mant * 2^r0)^(1/k) * 2^q.
  long q = ar.exp / static_cast<long>(k);
  long r0 = ar.exp - q * static_cast<long>(k);
  if (r0 < 0) {
    r0 += static_cast<long>(k);
    q -= 1;
  }
  // Scale by 2^(k*frac_bits) so the integer root carries frac_bits
  // fractional bits, then take floor root + 1 as a strict upper bound.
  Integer t = shl(ar.mant, static_cast<unsigned long>(r0) +
                               k * static_cast<unsigned long>(frac_bits));
  Integer s;
  mpz_root(s.get_mpz_t(), t.get_mpz_t(), k);
  s += 1;
  return Dyadic(s, q - static_cast<long>(frac_bits));
}

Dyadic ratio_up(const Integer& num, const Integer& den, unsigned frac_bits) {
  if (den <= 0) throw std::invalid_argument("ratio_up: denominator <= 0");
  if (num < 0) throw std::invalid_argument("ratio_up: negative numerator");
  Integer q;
  const Integer scaled = shl(num, frac_bits);
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  return Dyadic(q, -static_cast<long>(frac_bits));
}

}  // namespace pcurv
