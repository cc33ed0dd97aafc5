#include "pcurv/normal_form.hpp"

#include <stdexcept>

namespace pcurv {

NormalForm normalize(const RatPoly& a_raw, const RatPoly& b_raw) {
  if (b_raw.is_zero()) throw ZeroDenominator();
  if (a_raw.is_zero()) throw std::invalid_argument("numerator is zero");
  RatPoly g = poly_gcd_q(a_raw, b_raw);
  RatPoly a1 = divexact(a_raw, g);
  RatPoly b1 = divexact(b_raw, g);
  auto [ca, A] = content_primitive(a1);
  auto [cb, B] = content_primitive(b1);
  return NormalForm{ca / cb, A, B};
}

StructuralClass classify(const NormalForm& nf) {
  if (nf.a.degree() >= nf.b.degree()) return StructuralClass::DegreeViolation;
  if (nf.b.degree() >= 1 && resultant_z(nf.b, derivative(nf.b)) == 0)
    return StructuralClass::NonSquarefree;
  return StructuralClass::Admissible;
}

const char* to_string(StructuralClass c) {
  switch (c) {
    case StructuralClass::Admissible:
      return "admissible";
    case StructuralClass::DegreeViolation:
      return "degree-violation";
    case StructuralClass::NonSquarefree:
      return "non-squarefree-denominator";
  }
  return "?";
}

}  // namespace pcurv
