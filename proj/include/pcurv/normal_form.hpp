#ifndef PCURV_NORMAL_FORM_HPP
#define PCURV_NORMAL_FORM_HPP

/* Canonical form of a rational function u = c * a/b with a, b primitive
   integer polynomials, gcd(a, b) = 1 over Q, lc(b) > 0, and structural
   classification of the corresponding equation y' = u y. */

#include "pcurv/integer.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

struct NormalForm {
  Rational c;  // nonzero
  IntPoly a;   // primitive
  IntPoly b;   // primitive, lc > 0
};

enum class StructuralClass {
  Admissible,       // deg a < deg b and b squarefree
  DegreeViolation,  // deg a >= deg b (u has a polynomial part)
  NonSquarefree,    // b has a repeated factor (higher-order pole)
};

// pre: a_raw nonzero; b_raw nonzero (ZeroDenominator otherwise).
NormalForm normalize(const RatPoly& a_raw, const RatPoly& b_raw);

// Degree violation is reported before squarefreeness.
StructuralClass classify(const NormalForm& nf);

const char* to_string(StructuralClass c);

}  // namespace pcurv

#endif
