#include "pcurv/poly.hpp"

#include <algorithm>

namespace pcurv {

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rational> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(f[i]);
  return RatPoly(std::move(v));
}

IntPoly clear_denominators(const RatPoly& f, Integer* scale) {
  Integer L(1);
  for (const auto& c : f.coeffs()) L = lcm_int(L, denominator(c));
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = f[i] * Rational(L);
    v[i] = numerator(s);  // denominator is 1 by construction
  }
  if (scale) *scale = L;
  return IntPoly(std::move(v));
}

std::pair<Rational, IntPoly> content_primitive(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  Integer c(0);
  for (const auto& x : f.coeffs()) c = gcd_int(c, x);
  if (sgn(f.lc()) < 0) c = -c;
  std::vector<Integer> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(v[i].get_mpz_t(), f[i].get_mpz_t(), c.get_mpz_t());
  }
  return {Rational(c), IntPoly(std::move(v))};
}

std::pair<Rational, IntPoly> content_primitive(const RatPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  Integer L;
  IntPoly F = clear_denominators(f, &L);
  auto [c, P] = content_primitive(F);
  return {c / Rational(L), P};
}

RatPoly monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  Rational inv = Rational(1) / f.lc();
  return scalar_mul(f, inv);
}

IntPoly divexact_scalar(const IntPoly& A, const Integer& s) {
  std::vector<Integer> v(A.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!mpz_divisible_p(A[i].get_mpz_t(), s.get_mpz_t()))
      throw IdentityViolation("inexact scalar division");
    mpz_divexact(v[i].get_mpz_t(), A[i].get_mpz_t(), s.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly prem(const IntPoly& A, const IntPoly& B) {
  long d = A.degree() - B.degree();
  IntPoly R = A;
  long e = d + 1;
  const Integer lb = B.lc();
  while (!R.is_zero() && R.degree() >= B.degree()) {
    IntPoly sub = scalar_mul(B, R.lc());
    // shift by deg R - deg B
    std::vector<Integer> sh(R.degree() - B.degree(), Integer(0));
    sh.insert(sh.end(), sub.coeffs().begin(), sub.coeffs().end());
    R = scalar_mul(R, lb) - IntPoly(std::move(sh));
    --e;
  }
  if (e > 0) R = scalar_mul(R, pow_int(lb, static_cast<unsigned long>(e)));
  return R;
}

IntPoly gcd_z(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) return IntPoly();
  if (f.is_zero() || g.is_zero()) {
    auto [c, P] = content_primitive(f.is_zero() ? g : f);
    return scalar_mul(P, Integer(abs(numerator(c))));
  }
  auto [cf, A0] = content_primitive(f);
  auto [cg, B0] = content_primitive(g);
  Integer cont = gcd_int(numerator(cf), numerator(cg));
  cont = abs(cont);
  IntPoly A = A0, B = B0;
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero() && B.degree() > 0) {
    IntPoly R = prem(A, B);
    A = B;
    if (R.is_zero()) {
      B = R;
    } else {
      B = content_primitive(R).second;
    }
    if (A.degree() < B.degree()) std::swap(A, B);
  }
  if (!B.is_zero()) return IntPoly(cont);  // coprime primitive parts
  return scalar_mul(A, cont);
}

RatPoly poly_gcd_q(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() && g.is_zero()) return RatPoly();
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  IntPoly F = clear_denominators(f);
  IntPoly G = clear_denominators(g);
  return monic(to_rat(gcd_z(F, G)));
}

Integer resultant_z(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return Integer(0);
  IntPoly A = f, B = g;
  bool neg = false;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) neg = !neg;
  }
  if (B.degree() == 0) {
    Integer r = pow_int(B.lc(), static_cast<unsigned long>(A.degree()));
    return neg ? Integer(-r) : r;
  }
  auto [ca, Ap] = content_primitive(A);
  auto [cb, Bp] = content_primitive(B);
  Integer t = pow_int(numerator(ca), static_cast<unsigned long>(Bp.degree())) *
              pow_int(numerator(cb), static_cast<unsigned long>(Ap.degree()));
  if (neg) t = -t;
  A = Ap;
  B = Bp;
  Integer gg(1), h(1);
  while (true) {
    long d = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) t = -t;
    IntPoly R = prem(A, B);
    if (R.is_zero()) return Integer(0);
    IntPoly newB = divexact_scalar(
        R, gg * pow_int(h, static_cast<unsigned long>(d)));
    A = B;
    B = newB;
    gg = A.lc();
    if (d > 0) {
      Integer num = pow_int(gg, static_cast<unsigned long>(d));
      Integer den = pow_int(h, static_cast<unsigned long>(d - 1));
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw IdentityViolation("subresultant h update");
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) break;
  }
  Integer num = pow_int(B.lc(), static_cast<unsigned long>(A.degree()));
  Integer den = pow_int(h, static_cast<unsigned long>(A.degree() - 1));
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw IdentityViolation("subresultant final division");
  Integer res;
  mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return t * res;
}

IntPoly divexact(const IntPoly& A, const IntPoly& B) {
  if (B.is_zero()) throw ZeroDenominator();
  if (A.is_zero()) return IntPoly();
  if (A.degree() < B.degree())
    throw IdentityViolation("inexact polynomial division (degree)");
  std::vector<Integer> q(A.degree() - B.degree() + 1);
  IntPoly R = A;
  for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
    if (R.degree() == B.degree() + i) {
      if (!mpz_divisible_p(R.lc().get_mpz_t(), B.lc().get_mpz_t()))
        throw IdentityViolation("inexact polynomial division (lc)");
      Integer qi;
      mpz_divexact(qi.get_mpz_t(), R.lc().get_mpz_t(), B.lc().get_mpz_t());
      q[i] = qi;
      std::vector<Integer> sh(i, Integer(0));
      IntPoly sub = scalar_mul(B, qi);
      sh.insert(sh.end(), sub.coeffs().begin(), sub.coeffs().end());
      R = R - IntPoly(std::move(sh));
    }
  }
  if (!R.is_zero()) throw IdentityViolation("nonzero remainder");
  return IntPoly(std::move(q));
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& A, const RatPoly& B) {
  if (B.is_zero()) throw ZeroDenominator();
  RatPoly Q, R = A;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    Rational c = R.lc() / B.lc();
    std::size_t k = static_cast<std::size_t>(R.degree() - B.degree());
    RatPoly t = RatPoly::monomial(c, k);
    Q += t;
    R -= t * B;
  }
  return {Q, R};
}

RatPoly divexact(const RatPoly& A, const RatPoly& B) {
  auto [q, r] = divrem(A, B);
  if (!r.is_zero()) throw IdentityViolation("nonzero remainder over Q");
  return q;
}

Integer eval_scaled(const IntPoly& f, const Integer& s, const Integer& t) {
  if (f.is_zero()) return Integer(0);
  Integer acc = f.lc();
  Integer tp(1);
  for (long i = f.degree() - 1; i >= 0; --i) {
    tp *= t;
    acc = acc * s + f[i] * tp;
  }
  return acc;
}

Integer height(const IntPoly& f) {
  Integer h(0);
  for (const auto& c : f.coeffs()) {
    Integer a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

namespace {

template <typename T>
std::string poly_to_string(const Poly<T>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    if (f[i] == 0) continue;
    T c = f[i];
    bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    T a = negative ? T(-c) : c;
    bool unit = (a == 1);
    if (i == 0) {
      out += to_string(a);
    } else {
      if (!unit) {
        out += to_string(a);
        out += "*";
      }
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const IntPoly& f, const std::string& var) {
  return poly_to_string(f, var);
}

std::string to_string(const RatPoly& f, const std::string& var) {
  return poly_to_string(f, var);
}

}  // namespace pcurv
