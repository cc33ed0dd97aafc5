#include "pcurv/resultants.hpp"

#include <stdexcept>
#include <vector>

namespace pcurv {

namespace {

// Newton interpolation at the nodes 0, 1, ..., n.
RatPoly interpolate_at_integers(const std::vector<Rational>& vals) {
  std::size_t n = vals.size();
  std::vector<Rational> dd = vals;  // divided differences, in place
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t j = n - 1; j >= level; --j)
      dd[j] = (dd[j] - dd[j - 1]) / Rational(static_cast<long>(level));
  RatPoly P(dd[n - 1]);
  for (long k = static_cast<long>(n) - 2; k >= 0; --k) {
    RatPoly xk(std::vector<Rational>{Rational(-k), Rational(1)});
    P = P * xk + RatPoly(dd[k]);
  }
  return P;
}

}  // namespace

RTResultant rothstein_trager(const IntPoly& a, const IntPoly& b) {
  long n = b.degree();
  if (n < 1 || a.is_zero() || a.degree() >= n)
    throw std::invalid_argument("rothstein_trager needs a proper fraction");
  IntPoly bp = derivative(b);
  // R(w) has degree n; evaluate the (2n-1)x(2n-1) determinant at w = 0..n.
  // When a - j b' drops below the generic x-degree n-1 the determinant
  // picks up lc(b) once per lost row.
  std::vector<Rational> vals(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    IntPoly gj = a - scalar_mul(bp, Integer(j));
    Integer rj;
    if (gj.is_zero()) {
      rj = 0;
    } else {
      unsigned long pad = static_cast<unsigned long>((n - 1) - gj.degree());
      rj = pow_int(b.lc(), pad) * resultant_z(b, gj);
    }
    vals[static_cast<std::size_t>(j)] = Rational(rj);
  }
  RatPoly P = interpolate_at_integers(vals);
  std::vector<Integer> coeffs(static_cast<std::size_t>(P.degree()) + 1);
  for (long i = 0; i <= P.degree(); ++i) {
    const Rational& ci = P[static_cast<std::size_t>(i)];
    if (denominator(ci) != 1)
      throw InterpolationMismatch("non-integer coefficient in R(w)");
    coeffs[static_cast<std::size_t>(i)] = numerator(ci);
  }
  IntPoly R(std::move(coeffs));
  if (R.degree() != n)
    throw InterpolationMismatch("unexpected degree of R(w)");
  return RTResultant{R, abs(R.lc())};
}

Integer delta_of(const IntPoly& b) {
  if (b.degree() < 1)
    throw std::invalid_argument("delta_of needs a nonconstant denominator");
  return abs(resultant_z(b, derivative(b)));
}

bool height_bound_check(const RTResultant& rt, long n, const Integer& H) {
  if (n < 1 || H < 1) throw std::invalid_argument("height_bound_check");
  unsigned long un = static_cast<unsigned long>(n);
  for (long k = 0; k <= rt.R.degree(); ++k) {
    unsigned long uk = static_cast<unsigned long>(k);
    Integer lhs = rt.R[uk] * rt.R[uk] * pow_int(Integer(6), uk);
    Integer c = binomial_int(un, uk);
    Integer rhs = c * c * pow_int(H, 4 * un - 2) *
                  pow_int(Integer(static_cast<long>(n) + 1), un + uk - 1) *
                  pow_int(Integer(static_cast<long>(n)), un) *
                  pow_int(Integer(2 * static_cast<long>(n) + 1), uk);
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace pcurv
