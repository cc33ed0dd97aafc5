#ifndef PCURV_DECIDERS_HPP
#define PCURV_DECIDERS_HPP

/* Decision procedures for y' = u(x) y with u in Q(x):
     - decide_honda: the main prime-search decider (curvature checks up to
       the effective cutoff sigma, resultant computed lazily),
     - decide_by_roots: the rational-residue oracle (no primes involved),
     - kronecker_decide: effective splitting test for an integer polynomial,
     - rational_roots: exhaustive rational-root finder with multiplicities.
   All arithmetic is exact; verdicts carry enough data to be certificates. */

#include <cstdint>
#include <utility>
#include <vector>

#include "pcurv/bounds.hpp"
#include "pcurv/integer.hpp"
#include "pcurv/normal_form.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

enum class VerdictKind { Algebraic, NonAlgebraic, Inconclusive };

enum class Reason {
  None,
  DegreeViolation,           // deg a >= deg b: irregular singularity at infinity
  NonSquarefreeDenominator,  // higher-order finite pole
  IrrationalResidue,         // some residue of u is not rational
  NonvanishingCurvature,     // p-curvature nonzero at the witness prime
};

const char* verdict_string(VerdictKind k);
const char* reason_string(Reason r);  // nullptr for Reason::None

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  Reason reason = Reason::None;
  std::uint64_t witness_prime = 0;  // set with Reason::NonvanishingCurvature
  // Algebraic only: residues of u as (value, multiplicity), sorted by value.
  std::vector<std::pair<Rational, int>> residues;
  Integer checked_up_to;  // Inconclusive: the prime budget that was exhausted
  Integer sigma;          // meaningful iff has_sigma
  bool has_sigma = false;
  bool prime_range_exceeded = false;  // sigma >= 2^62
};

struct HondaResult {
  Verdict verdict;
  Integer delta;  // |res(b, b')|; 1 for degree violations / u = 0, 0 when
                  // the denominator is not squarefree
  bool has_bounds = false;
  BoundsReport bounds;  // valid iff has_bounds
};

// Prime factorization of n >= 1 (ascending); probabilistic primality with
// GMP's Miller-Rabin/BPSW backing the Brent-rho splitting stage.
std::vector<std::pair<Integer, int>> factor_integer(Integer n);

// All rational roots of P (nonzero) with their multiplicities in P,
// sorted ascending.
std::vector<std::pair<Rational, int>> rational_roots(const IntPoly& P);

// Rational-residue oracle: decides algebraicity without any prime search.
HondaResult decide_by_roots(const NormalForm& nf);

// Convenience front end: handles u = 0 and runs normalize() itself.
HondaResult decide_by_roots(const RatPoly& num, const RatPoly& den);

// Does R factor into linear factors mod p?  Throws BadPrimeError when p
// divides lc(R).
bool splits_mod_p(const IntPoly& R, std::uint64_t p);

enum class SplitKind { SplitsOverQ, NotSplit };

struct KroneckerVerdict {
  SplitKind kind = SplitKind::NotSplit;
  std::uint64_t witness_prime = 0;   // NotSplit found by a non-splitting p
  bool via_root_certificate = false; // decided by the root oracle after the
                                     // scan budget ran out
  Integer sigma;
  Integer checked_up_to;             // largest prime bound actually scanned
  std::vector<std::pair<Rational, int>> roots;  // SplitsOverQ: all roots
};

// Effective splitting decider for R with lc(R) > 0: R splits over Q iff it
// splits mod every good prime below sigma(R).
KroneckerVerdict kronecker_decide(const IntPoly& R, const Integer& budget,
                                  int threads = 1);

// Main decider.  Scans good primes p <= min(sigma - 1, budget); curvature
// nonzero at any good prime certifies NonAlgebraic; a complete scan below
// sigma certifies Algebraic; an exhausted budget yields Inconclusive.
HondaResult decide_honda(const NormalForm& nf, const Integer& budget,
                         int threads = 1);

// Convenience front end: handles u = 0 and runs normalize() itself.
HondaResult decide_honda(const RatPoly& num, const RatPoly& den,
                         const Integer& budget, int threads = 1);

}  // namespace pcurv

#endif
