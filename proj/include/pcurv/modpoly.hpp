#ifndef PCURV_MODPOLY_HPP
#define PCURV_MODPOLY_HPP

/* Polynomials over F_p for primes p < 2^62.  Coefficients are held reduced
   in [0, p); products go through unsigned 128-bit words.  ModPoly trims
   trailing zeros like Poly; SeriesPrefix is a fixed-length truncated power
   series and keeps its exact length. */

#include <cstdint>
#include <vector>

#include "pcurv/errors.hpp"
#include "pcurv/integer.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

inline constexpr std::uint64_t kMaxPrime = (1ull << 62);

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

// Inverse mod p via extended Euclid; throws NotInvertible when gcd != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

struct ModPoly {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> c;  // c[i] coefficient of x^i, trimmed

  ModPoly() = default;
  explicit ModPoly(std::uint64_t prime) : p(check(prime)) {}
  ModPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs);

  static std::uint64_t check(std::uint64_t prime) {
    if (prime < 2 || prime >= kMaxPrime) throw UnsupportedPrimeRange();
    return prime;
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  std::uint64_t operator[](std::size_t i) const {
    return i < c.size() ? c[i] : 0;
  }
  std::uint64_t lc() const { return c.back(); }  // pre: !is_zero()
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const ModPoly& o) const { return p == o.p && c == o.c; }
};

ModPoly operator+(const ModPoly& a, const ModPoly& b);
ModPoly operator-(const ModPoly& a, const ModPoly& b);
ModPoly operator*(const ModPoly& a, const ModPoly& b);
ModPoly scalar_mul(const ModPoly& a, std::uint64_t s);

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);

ModPoly derivative(const ModPoly& f);
std::uint64_t eval(const ModPoly& f, std::uint64_t x);
ModPoly make_monic(const ModPoly& f);  // pre: !is_zero()

// Remainder of a by b (lc(b) invertible).
ModPoly rem(const ModPoly& a, const ModPoly& b);
std::pair<ModPoly, ModPoly> divrem_mod(const ModPoly& a, const ModPoly& b);

// Monic gcd; gcd(0, 0) = 0.
ModPoly gcd_monic(ModPoly a, ModPoly b);

// f(x + c).
ModPoly taylor_shift(const ModPoly& f, std::uint64_t c);

// Reverse of a degree-n polynomial: x^n f(1/x).
ModPoly reverse(const ModPoly& f);

struct SeriesPrefix {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> c;  // exactly the first k coefficients

  std::size_t length() const { return c.size(); }
  bool all_zero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
};

// First k coefficients of 1/b; requires b(0) invertible (NotInvertible).
// Newton doubling: precision 1, 2, 4, ..., >= k, then truncated to k.
SeriesPrefix series_inverse(const ModPoly& b, std::size_t k);

// First k coefficients of the series num/den (den(0) invertible).
SeriesPrefix series_div(const ModPoly& num, const ModPoly& den,
                        std::size_t k);

// base^e mod f by binary powering; pre: deg base < deg f, deg f >= 1, e >= 0.
ModPoly quotient_pow(const ModPoly& base, const Integer& e, const ModPoly& f);

// Monic radical: same roots in an algebraic closure, each once.  Frobenius
// descent handles vanishing derivatives (p-th root is coefficientwise).
ModPoly squarefree_part_mod_p(const ModPoly& f);

}  // namespace pcurv

#endif
