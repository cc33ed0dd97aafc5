#ifndef PCURV_PCURVATURE_HPP
#define PCURV_PCURVATURE_HPP

/* p-curvature of the order-1 operator d/dx - u for u = a/b:
     psi_p = u^p + u^(p-1 derivatives),
   computed mod p.  psi_p has a p-th root which is a rational function with
   numerator and denominator degrees bounded by the reduced denominator
   degree n', so psi_p = 0 iff the first 2n' coefficients of that root's
   power-series expansion (around an ordinary point) vanish.  The fast path
   obtains those coefficients in softly-linear-in-n' time per prime via a
   linear-recurrence power projection; the naive path implements the
   defining derivative recurrence and is kept as a cross-check oracle. */

#include <cstdint>
#include <vector>

#include "pcurv/integer.hpp"
#include "pcurv/modpoly.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

// The checked series prefix for one prime.
struct PCurvPrefix {
  std::uint64_t p = 0;
  std::uint64_t shift = 0;  // series expanded around x = shift
  long n_reduced = 0;       // degree of the reduced denominator mod p
  // Prefix of the p-th root's expansion; psi_p = 0 iff it is all zero.
  std::vector<std::uint64_t> coeffs;

  bool all_zero() const {
    for (std::uint64_t c : coeffs)
      if (c != 0) return false;
    return true;
  }
  long first_nonzero() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) return static_cast<long>(i);
    return -1;
  }
};

enum class CurvOutcome {
  Zero,      // p-curvature vanishes mod p
  NonZero,   // it does not; prefix.first_nonzero() locates the witness term
  BadPrime,  // p divides delta: the reduction mod p is not usable
};

struct CurvatureCheck {
  CurvOutcome outcome = CurvOutcome::BadPrime;
  PCurvPrefix prefix;  // empty when BadPrime
};

// Fast check for one prime; delta is |res(b, b')| (or the equal |lc R| of
// the residue resultant), used only for the bad-prime test.
CurvatureCheck curvature_prefix(const IntPoly& a, const IntPoly& b,
                                std::uint64_t p, const Integer& delta);

// Same, computing delta = |res(b, b')| itself.  Pre: deg b >= 1.
CurvatureCheck curvature_prefix(const IntPoly& a, const IntPoly& b,
                                std::uint64_t p);

// A rational function mod p, reduced, with monic denominator.
struct ModRatFun {
  ModPoly num;
  ModPoly den;
  bool is_zero() const { return num.is_zero(); }
};

// Reference implementation: psi_p = (a_sub + A_{p-1}) / b^p via the
// derivative recurrence A_{k+1} = A_k' b - (k+1) A_k b', a_sub = a(x^p).
// Cost grows linearly with p; use for cross-checks only.  Works for any
// prime with b nonzero mod p (no bad-prime screening).
ModRatFun curvature_naive(const IntPoly& a, const IntPoly& b, std::uint64_t p);

// Power projection on the linear recurrence with (monic) characteristic
// polynomial f and initial terms init (size = deg f): returns the m values
// u_{(k+1)p-1}, k = 0..m-1, of the generated sequence.
std::vector<std::uint64_t> fiduccia_extract(const ModPoly& f,
                                            const std::vector<std::uint64_t>& init,
                                            std::uint64_t p, long m);

}  // namespace pcurv

#endif
