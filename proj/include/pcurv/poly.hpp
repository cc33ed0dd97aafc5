#ifndef PCURV_POLY_HPP
#define PCURV_POLY_HPP

/* Dense univariate polynomials over an exact coefficient ring.  Index i
   stores the coefficient of x^i; a nonzero polynomial keeps its top stored
   coefficient nonzero and the zero polynomial stores nothing (degree -1).
   Multiplication is classical below degree 32 and Karatsuba above. */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pcurv/errors.hpp"
#include "pcurv/integer.hpp"

namespace pcurv {

template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const T& c0) : c_{c0} { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  // Coefficient of x^i; zero beyond the stored range.
  const T& operator[](std::size_t i) const {
    static const T zero{};
    return i < c_.size() ? c_[i] : zero;
  }

  const T& lc() const { return c_.back(); }  // pre: !is_zero()
  const std::vector<T>& coeffs() const { return c_; }

  void set_coeff(std::size_t i, const T& v) {
    if (i >= c_.size()) {
      if (v == 0) return;
      c_.resize(i + 1);
    }
    c_[i] = v;
    trim();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
    return Poly(std::move(v));
  }

  Poly operator-(const Poly& o) const {
    std::vector<T> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
    return Poly(std::move(v));
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    return Poly(mul_vec(c_, o.c_));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

 private:
  std::vector<T> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static std::vector<T> mul_classical(const std::vector<T>& a,
                                      const std::vector<T>& b) {
    std::vector<T> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  static std::vector<T> mul_vec(const std::vector<T>& a,
                                const std::vector<T>& b) {
    if (std::min(a.size(), b.size()) < 32) return mul_classical(a, b);
    // Karatsuba split at half the longer operand.
    std::size_t m = (std::max(a.size(), b.size()) + 1) / 2;
    auto low = [&](const std::vector<T>& v) {
      return std::vector<T>(v.begin(),
                            v.begin() + std::min(m, v.size()));
    };
    auto high = [&](const std::vector<T>& v) {
      return v.size() > m ? std::vector<T>(v.begin() + m, v.end())
                          : std::vector<T>{};
    };
    std::vector<T> a0 = low(a), a1 = high(a), b0 = low(b), b1 = high(b);
    auto addv = [](const std::vector<T>& x, const std::vector<T>& y) {
      std::vector<T> s(std::max(x.size(), y.size()));
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i < x.size()) s[i] += x[i];
        if (i < y.size()) s[i] += y[i];
      }
      return s;
    };
    std::vector<T> z0 =
        (a0.empty() || b0.empty()) ? std::vector<T>{} : mul_vec(a0, b0);
    std::vector<T> z2 =
        (a1.empty() || b1.empty()) ? std::vector<T>{} : mul_vec(a1, b1);
    std::vector<T> sa = addv(a0, a1), sb = addv(b0, b1);
    std::vector<T> z1 =
        (sa.empty() || sb.empty()) ? std::vector<T>{} : mul_vec(sa, sb);
    // z1 -= z0 + z2
    if (z1.size() < std::max(z0.size(), z2.size()))
      z1.resize(std::max(z0.size(), z2.size()));
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
    std::vector<T> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) r[i + m] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) r[i + 2 * m] += z2[i];
    return r;
  }
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <typename T>
Poly<T> scalar_mul(const Poly<T>& f, const T& s) {
  if (s == 0) return Poly<T>();
  std::vector<T> v = f.coeffs();
  for (auto& x : v) x *= s;
  return Poly<T>(std::move(v));
}

template <typename T>
Poly<T> derivative(const Poly<T>& f) {
  if (f.degree() < 1) return Poly<T>();
  std::vector<T> v(f.degree());
  for (long i = 1; i <= f.degree(); ++i)
    v[i - 1] = f[i] * T(static_cast<long>(i));
  return Poly<T>(std::move(v));
}

template <typename T>
T eval(const Poly<T>& f, const T& x) {
  T acc{};
  for (long i = f.degree(); i >= 0; --i) acc = acc * x + f[i];
  return acc;
}

// f(x + c), classical Horner shift.
template <typename T>
Poly<T> taylor_shift(const Poly<T>& f, const T& c) {
  Poly<T> r;
  Poly<T> xc(std::vector<T>{c, T(1)});
  for (long i = f.degree(); i >= 0; --i) r = r * xc + Poly<T>(f[i]);
  return r;
}

RatPoly to_rat(const IntPoly& f);

// Smallest positive L with L*f integral, and the integer polynomial L*f.
IntPoly clear_denominators(const RatPoly& f, Integer* scale = nullptr);

// f = content * primitive with primitive in Z[x], gcd of coefficients 1 and
// positive leading coefficient.  Throws ZeroPolynomial on zero input.
std::pair<Rational, IntPoly> content_primitive(const IntPoly& f);
std::pair<Rational, IntPoly> content_primitive(const RatPoly& f);

RatPoly monic(const RatPoly& f);

// Monic gcd over Q (zero if both inputs are zero).
RatPoly poly_gcd_q(const RatPoly& f, const RatPoly& g);

// gcd over Z including contents, positive leading coefficient.
IntPoly gcd_z(const IntPoly& f, const IntPoly& g);

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R.
// pre: B nonzero, deg A >= deg B.
IntPoly prem(const IntPoly& A, const IntPoly& B);

// Signed resultant via the subresultant PRS; matches the Sylvester
// determinant convention.  res(f, c) = c^deg(f); res with a zero operand is 0.
Integer resultant_z(const IntPoly& f, const IntPoly& g);

// Exact division; throws IdentityViolation when the division is inexact.
IntPoly divexact(const IntPoly& A, const IntPoly& B);
RatPoly divexact(const RatPoly& A, const RatPoly& B);
IntPoly divexact_scalar(const IntPoly& A, const Integer& s);

std::pair<RatPoly, RatPoly> divrem(const RatPoly& A, const RatPoly& B);

// f(s/t) * t^deg(f) as an exact integer (t != 0).
Integer eval_scaled(const IntPoly& f, const Integer& s, const Integer& t);

// Largest |coefficient| (the naive height); zero polynomial has height 0.
Integer height(const IntPoly& f);

std::string to_string(const IntPoly& f, const std::string& var = "x");
std::string to_string(const RatPoly& f, const std::string& var = "x");

}  // namespace pcurv

#endif
