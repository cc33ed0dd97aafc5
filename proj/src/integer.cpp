#include "pcurv/integer.hpp"

#include <stdexcept>

namespace pcurv {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer pow_int(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Integer factorial_int(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial_int(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()),
             mpq_denref(q.get_mpq_t()));
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()),
             mpq_denref(q.get_mpq_t()));
  return r;
}

Integer numerator(const Rational& q) { return Integer(q.get_num()); }

Integer denominator(const Rational& q) { return Integer(q.get_den()); }

bool fits_u64(const Integer& n) {
  if (sgn(n) < 0) return false;
  return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& n) {
  // unsigned long is 64-bit on this platform; mpz_get_ui truncates to it.
  return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pcurv
