#ifndef PCURV_DYADIC_HPP
#define PCURV_DYADIC_HPP

/* Nonnegative dyadic numbers mant * 2^exp used as directed (one-sided)
   enclosures in the certified bound computations.  The _up operations round
   away from zero so upper bounds stay upper bounds; the two _down helpers
   exist for the one denominator that must be bounded from below. */

#include <cstdint>

#include "pcurv/integer.hpp"

namespace pcurv {

struct Dyadic {
  Integer mant;  // >= 0
  long exp = 0;  // value = mant * 2^exp

  Dyadic() : mant(0) {}
  explicit Dyadic(const Integer& m, long e = 0);

  bool is_zero() const { return mant == 0; }
  Rational to_rational() const;
  std::string str() const;  // exact value as "p" or "p/q"

  static Dyadic one() { return Dyadic(Integer(1)); }
};

// Default mantissa precision (bits) for rounded results.
inline constexpr unsigned kDyadicPrec = 96;

// -1, 0, +1 as a < b, a == b, a > b.
int cmp(const Dyadic& a, const Dyadic& b);

Dyadic round_up_bits(const Dyadic& a, unsigned prec);
Dyadic round_down_bits(const Dyadic& a, unsigned prec);

Dyadic mul_up(const Dyadic& a, const Dyadic& b, unsigned prec = kDyadicPrec);
Dyadic add_up(const Dyadic& a, const Dyadic& b, unsigned prec = kDyadicPrec);
Dyadic square_down(const Dyadic& a, unsigned prec = kDyadicPrec);

// Upper bound on a/b_low; pre: b_low > 0 and a lower bound of the true
// denominator.
Dyadic div_up(const Dyadic& a, const Dyadic& b_low,
              unsigned prec = kDyadicPrec);

// Upper bound on a^(1/k) with at least `frac_bits` fractional bits of
// relative precision; k >= 1.
Dyadic root_up(const Dyadic& a, unsigned long k, unsigned frac_bits = 64);

// Upper bound on num/den as a dyadic with `frac_bits` fractional bits.
Dyadic ratio_up(const Integer& num, const Integer& den,
                unsigned frac_bits = 64);

}  // namespace pcurv

#endif
