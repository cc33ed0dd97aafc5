#ifndef PCURV_RESULTANTS_HPP
#define PCURV_RESULTANTS_HPP

/* The residue resultant R(w) = res_x(b, a - w b') of a proper fraction a/b
   with squarefree denominator.  Its roots are exactly the residues of a/b at
   the poles; its leading coefficient is (-1)^deg(b) res(b, b'). */

#include "pcurv/integer.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

struct RTResultant {
  IntPoly R;      // degree = deg b
  Integer delta;  // |lc(R)| = |res(b, b')|
};

// pre: (a, b) admissible (deg a < deg b, b squarefree, gcd(a,b) = 1).
// Computed by evaluation at w = 0..deg(b) and exact interpolation; a
// non-integer interpolated coefficient raises InterpolationMismatch.
RTResultant rothstein_trager(const IntPoly& a, const IntPoly& b);

// |res(b, b')|; pre: deg b >= 1.
Integer delta_of(const IntPoly& b);

// Coefficient bound: |r_k| <= C(n,k) 6^{-k/2} H^{2n-1} (n+1)^{(n+k-1)/2}
// n^{n/2} (2n+1)^{k/2}, checked exactly by squaring both sides.
// pre: n = deg b >= 1, H >= max height of a and b.
bool height_bound_check(const RTResultant& rt, long n, const Integer& H);

}  // namespace pcurv

#endif
