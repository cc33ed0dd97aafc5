#ifndef PCURV_BOUNDS_HPP
#define PCURV_BOUNDS_HPP

/* Certified numeric bounds feeding the prime-search cutoff:
     - an upper bound on the largest complex root magnitude of an integer
       polynomial (Graeffe iteration with directed rounding),
     - an upper bound on prod_{p | delta} p^(3/(p-1)),
     - the effective cutoff sigma derived from both.
   Every quantity here is a rigorous one-sided enclosure: replacing any of
   them by a larger value keeps the final decision procedure correct, so all
   rounding is done upward (except denominators, bounded below). */

#include <cstdint>
#include <vector>

#include "pcurv/dyadic.hpp"
#include "pcurv/integer.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

// Upper bound on max |z| over complex roots z of f (deg f >= 1), within a
// relative factor of (1 + rel_tol) of the true maximum.  rel_tol must lie in
// (0, 1/8]; the default gives a bound within 0.1% of the exact radius.
// Returns 0 when f is a monomial (all roots zero).
Dyadic root_radius_upper(const IntPoly& f,
                         const Rational& rel_tol = Rational(1, 1024));

// Upper bound on prod_{p prime, p | delta} p^(3/(p-1)) with at least
// frac_bits fractional bits per factor; delta >= 1.
Dyadic delta_cubed_upper(const Integer& delta, unsigned frac_bits = 32);

struct BoundsReport {
  Integer delta;           // the resultant leading coefficient, >= 1
  Dyadic delta_cubed_up;   // certified upper bound on delta(Delta)^3
  Dyadic root_bound;       // B = max(root radius bound, 1)
  Integer M;               // ceil(C0 * Delta^3 * delta(Delta)^3)
  Integer N;               // ceil(A * B * M)
  Integer sigma;           // (2M+1)*N + 2M
  bool prime_range_exceeded = false;  // sigma >= 2^62
};

// Assemble the cutoff from delta and a certified root-magnitude bound.
BoundsReport effective_bounds(const Integer& delta, const Dyadic& root_bound,
                              unsigned frac_bits = 32);

// Convenience: bounds for a resultant polynomial R with delta = |lc(R)|.
BoundsReport effective_bounds_for(const IntPoly& R);

}  // namespace pcurv

#endif
