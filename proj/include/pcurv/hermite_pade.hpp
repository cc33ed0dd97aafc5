#ifndef PCURV_HERMITE_PADE_HPP
#define PCURV_HERMITE_PADE_HPP

/* Symbolic verification of the explicit simultaneous Pade approximants to
   the family (1-z)^{i*alpha}, i = 0..2M, that drive the effective cutoff:
   polynomials P_i of degree <= N with coefficients in Q(alpha) such that
       sum_i P_i(z) (1-z)^{i*alpha} = lead * z^sigma + O(z^{sigma+1}),
   sigma = (2M+1)N + 2M,  lead = N!^(2M+1) / sigma!  (independent of alpha).
   The table comes from the divided-difference structure of the exponent
   nodes i*alpha + k; everything is verified by exact arithmetic in
   Q(alpha). */

#include <utility>
#include <vector>

#include "pcurv/integer.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

// An element of Q(alpha): num/den with den monic and gcd(num, den) = 1.
struct AlphaRat {
  RatPoly num;
  RatPoly den{std::vector<Rational>{Rational(1)}};

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const AlphaRat& o) const {
    return num == o.num && den == o.den;
  }
};

AlphaRat make_alpha_rat(RatPoly num, RatPoly den);  // reduces, monic den
AlphaRat operator+(const AlphaRat& a, const AlphaRat& b);
AlphaRat operator*(const AlphaRat& a, const AlphaRat& b);
AlphaRat inverse(const AlphaRat& a);  // throws ZeroDenominator on 0

// Generalized binomial C(k*alpha + s, r) = prod_{t<r} (k alpha + s - t) / r!
// as a polynomial in alpha.  r >= 0.
RatPoly binom_alpha(long k, long s, long r);

// The coefficient table p[i][h] of P_i(z) = sum_h p_{i,h} z^h, i = 0..2M,
// h = 0..N, derived from the (1-z)^k-basis divided-difference weights
//   q_{i,k} = (-1)^(sigma+N-k) C(N,k)
//             / ((N+1)^(2M) prod_{j != i} C((i-j) alpha + k, N+1))
// via p_{i,h} = (-1)^h sum_{k >= h} C(k,h) q_{i,k}; each entry reduced.
std::vector<std::vector<AlphaRat>> hp_coefficients(long M, long N);

struct HPCertificate {
  long M = 0;
  long N = 0;
  long sigma = 0;
  Rational lead;  // N!^(2M+1) / sigma!
  std::vector<std::vector<AlphaRat>> p;
};

// Builds the table and verifies the approximation order symbolically by
// two independent routes: (1) the z-series of sum_i P_i(z) (1-z)^{i alpha}
// has zero coefficients below sigma and exactly `lead` at sigma; (2) the
// basis weights q_{i,k} annihilate C(i alpha + k, r) for all r < sigma
// (the divided-difference identity) with the matching normalization at
// r = sigma.  Any failure raises IdentityViolation.  Guard: sigma <= 40
// (the symbolic check is dense in Q(alpha)); M, N >= 1.
HPCertificate hp_verify(long M, long N);

}  // namespace pcurv

#endif
