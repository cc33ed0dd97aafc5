#ifndef PCURV_ERRORS_HPP
#define PCURV_ERRORS_HPP

/* Error taxonomy shared by the whole library.  Domain errors report inputs
   outside an operation's contract; the logic errors flag internal
   consistency checks that must never fire on valid inputs. */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcurv {

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial()
      : std::domain_error("zero polynomial has no content/primitive split") {}
};

struct ZeroDenominator : std::domain_error {
  ZeroDenominator() : std::domain_error("denominator is identically zero") {}
};

// Power series inversion requires a unit constant term.
struct NotInvertible : std::domain_error {
  NotInvertible() : std::domain_error("constant term vanishes mod p") {}
};

// The denominator reduces to zero modulo p.
struct DegenerateDenominator : std::domain_error {
  DegenerateDenominator()
      : std::domain_error("denominator vanishes identically mod p") {}
};

// Moduli must fit the 62-bit word kernels.
struct UnsupportedPrimeRange : std::domain_error {
  UnsupportedPrimeRange() : std::domain_error("prime out of supported range") {}
};

// The prime bound sigma left the supported scan range (>= 2^62).
struct PrimeRangeExceeded : std::runtime_error {
  PrimeRangeExceeded()
      : std::runtime_error("prime bound sigma exceeds the supported range") {}
};

// No point of F_p avoids the poles; the series-prefix method cannot run.
struct NoOrdinaryPoint : std::runtime_error {
  NoOrdinaryPoint()
      : std::runtime_error("denominator vanishes on all of F_p") {}
};

// A splitting test was asked at a prime dividing the leading coefficient.
struct BadPrimeError : std::domain_error {
  BadPrimeError()
      : std::domain_error("prime divides the leading coefficient") {}
};

// Evaluation/interpolation produced a non-integer coefficient.
struct InterpolationMismatch : std::logic_error {
  explicit InterpolationMismatch(const std::string& what)
      : std::logic_error("interpolation mismatch: " + what) {}
};

// A symbolic identity that holds by construction failed to verify.
struct IdentityViolation : std::logic_error {
  explicit IdentityViolation(const std::string& what)
      : std::logic_error("identity violation: " + what) {}
};

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace pcurv

#endif
