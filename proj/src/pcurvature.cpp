#include "pcurv/pcurvature.hpp"

#include <stdexcept>
#include <utility>

#include "pcurv/errors.hpp"
#include "pcurv/resultants.hpp"

namespace pcurv {

namespace {

// Exact quotient of ModPolys (throws IdentityViolation on nonzero rest).
ModPoly divexact_mod(const ModPoly& a, const ModPoly& b) {
  auto [q, r] = divrem_mod(a, b);
  if (!r.is_zero()) throw IdentityViolation("divexact_mod: nonzero remainder");
  return q;
}

// f(x^p) over F_p; by Frobenius this equals f(x)^p, but substitution only
// spreads the coefficients.
ModPoly substitute_xp(const ModPoly& f, std::uint64_t p) {
  ModPoly r(f.p);
  if (f.is_zero()) return r;
  r.c.assign(static_cast<std::size_t>(f.degree()) * p + 1, 0);
  for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i * p] = f.c[i];
  r.trim();
  return r;
}

}  // namespace

std::vector<std::uint64_t> fiduccia_extract(const ModPoly& f,
                                            const std::vector<std::uint64_t>& init,
                                            std::uint64_t p, long m) {
  const long n = f.degree();
  if (n < 1) throw std::invalid_argument("fiduccia_extract: deg f >= 1");
  if (f.lc() != 1)
    throw std::invalid_argument("fiduccia_extract: f must be monic");
  if (static_cast<long>(init.size()) != n)
    throw std::invalid_argument("fiduccia_extract: init size != deg f");
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(m));
  if (m <= 0) return out;

  ModPoly x(f.p, {0, 1});
  if (n == 1) x = rem(x, f);
  // e = x^(p-1) mod f, then multiply by x^p mod f at each step, so that the
  // k-th projection reads off u_{(k+1)p-1}.
  ModPoly e = quotient_pow(x, Integer(p - 1), f);
  ModPoly xp = rem(e * x, f);
  for (long k = 0; k < m; ++k) {
    unsigned __int128 acc = 0;
    for (std::size_t i = 0; i < e.c.size(); ++i) {
      acc += static_cast<unsigned __int128>(e.c[i]) *
             init[static_cast<std::size_t>(i)];
      acc %= f.p;
    }
    out.push_back(static_cast<std::uint64_t>(acc));
    if (k + 1 < m) e = rem(e * xp, f);
  }
  return out;
}

CurvatureCheck curvature_prefix(const IntPoly& a, const IntPoly& b,
                                std::uint64_t p, const Integer& delta) {
  ModPoly::check(p);
  CurvatureCheck res;
  if (mpz_divisible_ui_p(delta.get_mpz_t(), p)) {
    res.outcome = CurvOutcome::BadPrime;
    return res;
  }

  ModPoly ab = reduce_mod(a, p);
  ModPoly bb = reduce_mod(b, p);
  // p does not divide delta, and lc(b) divides res(b, b'), so the reduction
  // keeps the full denominator degree.
  if (bb.degree() != b.degree())
    throw IdentityViolation("curvature_prefix: denominator degree dropped");
  const ModPoly g = gcd_monic(ab, bb);
  if (g.degree() > 0) {
    ab = divexact_mod(ab, g);
    bb = divexact_mod(bb, g);
  }
  const long nr = bb.degree();

  // Expansion point: least shift c with b(c) != 0 mod p.  A degree-nr
  // polynomial has at most nr roots, so searching nr+1 values suffices
  // unless p <= nr exhausts the field.
  std::uint64_t shift = 0;
  bool found = false;
  for (std::uint64_t c = 0; c <= std::min<std::uint64_t>(p - 1,
                                    static_cast<std::uint64_t>(nr));
       ++c) {
    if (eval(bb, c) != 0) {
      shift = c;
      found = true;
      break;
    }
  }
  if (!found) throw NoOrdinaryPoint();
  if (shift != 0) {
    ab = taylor_shift(ab, shift);
    bb = taylor_shift(bb, shift);
  }

  PCurvPrefix pref;
  pref.p = p;
  pref.shift = shift;
  pref.n_reduced = nr;

  if (nr == 0) {
    // Constant u mod p: the curvature is that constant.
    const std::uint64_t c0 =
        mulmod(ab.is_zero() ? 0 : ab.c[0], invmod(bb.c[0], p), p);
    pref.coeffs.assign(1, c0);
  } else {
    const std::size_t m = 2 * static_cast<std::size_t>(nr);
    const SeriesPrefix w = series_div(ab, bb, m);
    // Characteristic polynomial of the coefficient recurrence: the reverse
    // of the denominator (constant term = lc != 0; lead = b(shift) != 0).
    const ModPoly f = make_monic(reverse(bb));
    std::vector<std::uint64_t> init(w.c.begin(),
                                    w.c.begin() + static_cast<long>(nr));
    const std::vector<std::uint64_t> v =
        fiduccia_extract(f, init, p, static_cast<long>(m));
    pref.coeffs.resize(m);
    // s_k = u_k - u_{(k+1)p-1}: the derivative part contributes with a minus
    // sign because the surviving falling factorial is (p-1)! = -1 mod p.
    for (std::size_t k = 0; k < m; ++k)
      pref.coeffs[k] = submod(w.c[k], v[k], p);
  }

  res.outcome =
      pref.all_zero() ? CurvOutcome::Zero : CurvOutcome::NonZero;
  res.prefix = std::move(pref);
  return res;
}

CurvatureCheck curvature_prefix(const IntPoly& a, const IntPoly& b,
                                std::uint64_t p) {
  return curvature_prefix(a, b, p, delta_of(b));
}

ModRatFun curvature_naive(const IntPoly& a, const IntPoly& b,
                          std::uint64_t p) {
  ModPoly::check(p);
  ModPoly ab = reduce_mod(a, p);
  ModPoly bb = reduce_mod(b, p);
  if (bb.is_zero()) throw ZeroDenominator();
  const ModPoly g = gcd_monic(ab, bb);
  if (g.degree() > 0) {
    ab = divexact_mod(ab, g);
    bb = divexact_mod(bb, g);
  }

  // A_{k+1} = A_k' b - (k+1) A_k b', so u^((k)) = A_k / b^(k+1).
  const ModPoly bd = derivative(bb);
  ModPoly A = ab;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    A = derivative(A) * bb - scalar_mul(A * bd, (k + 1) % p);
  }

  // psi = u^p + u^((p-1)) = (a(x^p) + A_{p-1}) / b(x^p), and b(x^p) = b^p.
  ModPoly num = substitute_xp(ab, p) + A;
  ModPoly den = substitute_xp(bb, p);

  ModRatFun out;
  if (num.is_zero()) {
    out.num = ModPoly(p);
    out.den = ModPoly(p, {1});
    return out;
  }
  const ModPoly h = gcd_monic(num, den);
  if (h.degree() > 0) {
    num = divexact_mod(num, h);
    den = divexact_mod(den, h);
  }
  const std::uint64_t s = invmod(den.lc(), p);
  out.num = scalar_mul(num, s);
  out.den = scalar_mul(den, s);
  return out;
}

}  // namespace pcurv
