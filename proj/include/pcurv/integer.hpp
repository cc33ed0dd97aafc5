#ifndef PCURV_INTEGER_HPP
#define PCURV_INTEGER_HPP

/* Exact scalar types.  Integer and Rational are GMP's C++ classes: arbitrary
   precision, value semantics, canonical rationals (reduced, positive
   denominator) as long as construction goes through make_rational or
   arithmetic. */

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pcurv {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

Integer gcd_int(const Integer& a, const Integer& b);
Integer lcm_int(const Integer& a, const Integer& b);

// b^e for e >= 0.
Integer pow_int(const Integer& b, unsigned long e);

Integer factorial_int(unsigned long n);
Integer binomial_int(unsigned long n, unsigned long k);

Integer ceil_q(const Rational& q);
Integer floor_q(const Rational& q);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

bool fits_u64(const Integer& n);
std::uint64_t to_u64(const Integer& n);  // pre: 0 <= n < 2^64

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);  // "p" or "p/q"

}  // namespace pcurv

#endif
