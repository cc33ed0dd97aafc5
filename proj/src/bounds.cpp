#include "pcurv/bounds.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pcurv/errors.hpp"

namespace pcurv {

namespace {

/* ----- signed dyadics and directed interval arithmetic -----------------
   The Graeffe iteration below squares root magnitudes each step, soexact
   integer coefficients double in size per step and quickly become
   unaffordable.  We instead enclose every coefficient in an interval with
   signed dyadic endpoints, rounding lo toward -inf and hi toward +inf, so
   the final magnitude bounds are certified upper bounds no matter how the
   rounding errors interact. */

struct SD {
  Integer m;  // any sign
  long e = 0;
};

std::size_t abits(const Integer& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

void sd_norm(SD& x) {
  if (x.m == 0) {
    x.e = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(x.m.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(x.m.get_mpz_t(), x.m.get_mpz_t(), tz);
    x.e += static_cast<long>(tz);
  }
}

long sd_top(const SD& x) {  // exponent of the leading bit; x.m != 0
  return x.e + static_cast<long>(abits(x.m));
}

SD sd_neg(const SD& x) { return SD{-x.m, x.e}; }

// Round to prec mantissa bits; dir > 0 rounds toward +inf, else toward -inf.
SD sd_round(const SD& x, unsigned prec, int dir) {
  const std::size_t len = abits(x.m);
  if (len <= prec) return x;
  const unsigned long drop = static_cast<unsigned long>(len - prec);
  SD r;
  if (dir > 0) {
    mpz_cdiv_q_2exp(r.m.get_mpz_t(), x.m.get_mpz_t(), drop);
  } else {
    mpz_fdiv_q_2exp(r.m.get_mpz_t(), x.m.get_mpz_t(), drop);
  }
  r.e = x.e + static_cast<long>(drop);
  sd_norm(r);
  return r;
}

SD sd_mul_exact(const SD& a, const SD& b) {
  SD r{a.m * b.m, a.e + b.e};
  sd_norm(r);
  return r;
}

SD sd_add(const SD& a, const SD& b, unsigned prec, int dir) {
  if (a.m == 0) return sd_round(b, prec, dir);
  if (b.m == 0) return sd_round(a, prec, dir);
  const long atop = sd_top(a);
  const long btop = sd_top(b);
  const SD& big = (atop >= btop) ? a : b;
  const long gap = ((atop >= btop) ? atop - btop : btop - atop);
  if (gap > static_cast<long>(prec) + 4) {
    // The small addend is below the rounding granularity: absorb it into a
    // one-ulp outward bump instead of materializing a huge aligned sum.
    SD r = sd_round(big, prec, dir);
    r.m += (dir > 0) ? 1 : -1;
    sd_norm(r);
    return sd_round(r, prec, dir);
  }
  SD r;
  if (a.e <= b.e) {
    Integer bs;
    mpz_mul_2exp(bs.get_mpz_t(), b.m.get_mpz_t(),
                 static_cast<unsigned long>(b.e - a.e));
    r.m = a.m + bs;
    r.e = a.e;
  } else {
    Integer as;
    mpz_mul_2exp(as.get_mpz_t(), a.m.get_mpz_t(),
                 static_cast<unsigned long>(a.e - b.e));
    r.m = as + b.m;
    r.e = b.e;
  }
  sd_norm(r);
  return sd_round(r, prec, dir);
}

int sd_cmp(const SD& a, const SD& b) {
  const int sa = sgn(a.m);
  const int sb = sgn(b.m);
  if (sa != sb) return (sa < sb) ? -1 : 1;
  if (sa == 0) return 0;
  const long atop = sd_top(a);
  const long btop = sd_top(b);
  if (atop != btop) {
    const int mag = (atop < btop) ? -1 : 1;
    return sa * mag;
  }
  int c;
  if (a.e <= b.e) {
    Integer bs;
    mpz_mul_2exp(bs.get_mpz_t(), b.m.get_mpz_t(),
                 static_cast<unsigned long>(b.e - a.e));
    c = ::cmp(a.m, bs);
  } else {
    Integer as;
    mpz_mul_2exp(as.get_mpz_t(), a.m.get_mpz_t(),
                 static_cast<unsigned long>(a.e - b.e));
    c = ::cmp(as, b.m);
  }
  return (c > 0) - (c < 0);
}

struct IV {
  SD lo, hi;
};

IV iv_exact(const Integer& c) {
  SD s{c, 0};
  sd_norm(s);
  return IV{s, s};
}

bool iv_true_zero(const IV& v) { return v.lo.m == 0 && v.hi.m == 0; }

IV iv_neg(const IV& v) { return IV{sd_neg(v.hi), sd_neg(v.lo)}; }

IV iv_twice(IV v) {
  if (v.lo.m != 0) v.lo.e += 1;
  if (v.hi.m != 0) v.hi.e += 1;
  return v;
}

IV iv_add(const IV& a, const IV& b, unsigned prec) {
  return IV{sd_add(a.lo, b.lo, prec, -1), sd_add(a.hi, b.hi, prec, +1)};
}

IV iv_mul(const IV& a, const IV& b, unsigned prec) {
  const SD p1 = sd_mul_exact(a.lo, b.lo);
  const SD p2 = sd_mul_exact(a.lo, b.hi);
  const SD p3 = sd_mul_exact(a.hi, b.lo);
  const SD p4 = sd_mul_exact(a.hi, b.hi);
  const SD* lo = &p1;
  const SD* hi = &p1;
  for (const SD* p : {&p2, &p3, &p4}) {
    if (sd_cmp(*p, *lo) < 0) lo = p;
    if (sd_cmp(*p, *hi) > 0) hi = p;
  }
  return IV{sd_round(*lo, prec, -1), sd_round(*hi, prec, +1)};
}

// Certified upper bound on the magnitude of anything inside the interval.
Dyadic iv_mag_up(const IV& v) {
  const SD cand = (sd_cmp(v.hi, sd_neg(v.lo)) >= 0) ? v.hi : sd_neg(v.lo);
  return Dyadic(abs(cand.m), cand.e);
}

/* One Graeffe step in the sign-normalized form: with h the current
   coefficients, the next ones are
     h'_j = h_j^2 + 2 * sum_{i>=1} (-1)^i h_{j-i} h_{j+i},
   whose roots are the negated squares of the current roots (same
   magnitudes, which is all the radius functional consumes). */
std::vector<IV> graeffe_step(const std::vector<IV>& h, unsigned prec) {
  const long d = static_cast<long>(h.size()) - 1;
  std::vector<IV> nh(h.size());
  for (long j = 0; j <= d; ++j) {
    IV acc = iv_mul(h[j], h[j], prec);
    const long imax = std::min(j, d - j);
    for (long i = 1; i <= imax; ++i) {
      IV pr = iv_twice(iv_mul(h[j - i], h[j + i], prec));
      acc = (i & 1) ? iv_add(acc, iv_neg(pr), prec) : iv_add(acc, pr, prec);
    }
    nh[j] = acc;
  }
  return nh;
}

/* Run K Graeffe steps at the given working precision and evaluate the
   radius functional.  Returns {quality_ok, bound}; the bound is a certified
   upper bound regardless of quality, and quality_ok reports whether every
   surviving coefficient enclosure kept at least 48 significant bits (so the
   two-sided tolerance claim holds). */
std::pair<bool, Dyadic> graeffe_run(const IntPoly& f, unsigned K,
                                    unsigned prec) {
  const long d = f.degree();
  // Root magnitudes are invariant under f -> -f; start with a positive lead
  // so the no-cross-terms invariant keeps its enclosure positive throughout.
  const Integer sign = f.lc() < 0 ? Integer(-1) : Integer(1);
  std::vector<IV> h(static_cast<std::size_t>(d) + 1);
  for (long j = 0; j <= d; ++j)
    h[static_cast<std::size_t>(j)] = iv_exact(Integer(sign * f[j]));
  for (unsigned s = 0; s < K; ++s) h = graeffe_step(h, prec);

  bool quality = true;
  for (long j = 0; j <= d; ++j) {
    const IV& v = h[static_cast<std::size_t>(j)];
    if (iv_true_zero(v)) continue;
    const SD w = sd_add(v.hi, sd_neg(v.lo), prec, +1);
    if (w.m == 0) continue;  // exact enclosure
    const Dyadic u = iv_mag_up(v);
    const long utop = u.exp + static_cast<long>(abits(u.mant));
    if (utop - sd_top(w) < 48) {
      quality = false;
      break;
    }
  }

  // Lower bound on the leading coefficient's magnitude.  The lead only ever
  // gets squared (no cross terms), so its enclosure stays positive.
  const IV& lead = h[static_cast<std::size_t>(d)];
  if (lead.lo.m <= 0) throw IdentityViolation("graeffe: leading enclosure");
  const Dyadic ell(lead.lo.m, lead.lo.e);

  Dyadic F;
  bool any = false;
  for (long k = 1; k <= d; ++k) {
    const IV& v = h[static_cast<std::size_t>(d - k)];
    if (iv_true_zero(v)) continue;
    const Dyadic u = iv_mag_up(v);
    const Dyadic t = div_up(mul_up(Dyadic(Integer(d)), u), ell);
    const Dyadic rk = root_up(t, static_cast<unsigned long>(k), 64);
    if (!any || cmp(rk, F) > 0) {
      F = rk;
      any = true;
    }
  }
  if (!any) return {true, Dyadic()};  // all roots are zero

  Dyadic B = F;
  for (unsigned s = 0; s < K; ++s) B = root_up(B, 2, 64);
  return {quality, B};
}

/* Number of Graeffe steps: enough that the functional's intrinsic
   overshoot factor d^2 decays below (1 + tol/4) after taking the 2^K-th
   root, i.e. 2^K >= ln(d^2) / ln(1 + tol/4).  We use the sufficient
   integer criterion 2^K >= 8 * ln_up(d^2) / tol (via ln(1+x) >= x/2 on
   (0,1] and ln 2 < 710/1024), which costs at most one extra step. */
unsigned graeffe_steps(long d, const Rational& tol) {
  if (d <= 1) return 0;
  const Rational lnd2_up(Integer(2) * Integer(abits(Integer(d))) * 710, 1024);
  const Rational rhs = 8 * lnd2_up / tol;
  unsigned K = 0;
  Integer pw = 1;
  while (Rational(pw) < rhs) {
    pw <<= 1;
    ++K;
  }
  return K;
}

// 1 + 2*t as an upper bound for exp(t), valid for t in [0,1]; t_up must be
// an upper bound on the true exponent 3*ln(m)/k_low and itself lie in [0,1].
Dyadic exp_small_upper(const Rational& t_up, unsigned frac_bits) {
  const Rational ub = 1 + 2 * t_up;
  return ratio_up(numerator(ub), denominator(ub), frac_bits);
}

}  // namespace

Dyadic root_radius_upper(const IntPoly& f, const Rational& rel_tol) {
  if (f.is_zero()) throw ZeroPolynomial();
  const long d = f.degree();
  if (d < 1)
    throw std::invalid_argument("root_radius_upper: degree >= 1 required");
  if (!(rel_tol > 0) || rel_tol > Rational(1, 8) ||
      rel_tol < Rational(1, 1l << 20)) {
    throw std::invalid_argument(
        "root_radius_upper: rel_tol must lie in [2^-20, 1/8]");
  }
  bool monomial = true;
  for (long i = 0; i < d; ++i) {
    if (f[i] != 0) {
      monomial = false;
      break;
    }
  }
  if (monomial) return Dyadic();

  const unsigned K = graeffe_steps(d, rel_tol);
  // Escalate working precision if enclosures lose too many bits to
  // cancellation; every rung already yields a sound upper bound, the later
  // rungs only restore the two-sided tolerance.
  std::pair<bool, Dyadic> res{false, Dyadic()};
  for (unsigned prec : {320u, 1280u, 5120u}) {
    res = graeffe_run(f, K, prec);
    if (res.first) break;
  }
  return res.second;
}

Dyadic delta_cubed_upper(const Integer& delta, unsigned frac_bits) {
  if (delta < 1)
    throw std::invalid_argument("delta_cubed_upper: delta >= 1 required");
  Dyadic out = Dyadic::one();

  const auto apply_prime = [&](const Integer& p) {
    if (p == 2) {  // 2^(3/1) = 8, exact
      out = mul_up(out, Dyadic(Integer(8)));
      return;
    }
    if (p <= (1l << 20) + 1) {
      const unsigned long k = mpz_get_ui(Integer(p - 1).get_mpz_t());
      out = mul_up(out, root_up(Dyadic(p * p * p), k, frac_bits));
      return;
    }
    // Large prime: p^(3/(p-1)) = exp(t) with t = 3 ln p/(p-1) << 1.
    const Rational t_up =
        Rational(Integer(3) * Integer(abits(p)) * 710, 1024) / Rational(p - 1);
    out = mul_up(out, exp_small_upper(t_up, frac_bits));
  };

  Integer m = delta;
  if (m % 2 == 0) {
    apply_prime(2);
    while (m % 2 == 0) m /= 2;
  }
  Integer q = 3;
  const Integer cap = Integer(1) << 20;
  while (q * q <= m && q <= cap) {
    if (m % q == 0) {
      apply_prime(q);
      while (m % q == 0) m /= q;
    }
    q += 2;
  }
  if (m > 1) {
    if (q * q > m || m <= (Integer(1) << 40)) {
      // No divisor up to min(sqrt(m), 2^20); with m <= 2^40 any composite
      // would need two factors above 2^20, so m is prime either way.
      apply_prime(m);
    } else {
      // Unfactored cofactor whose prime factors all exceed 2^20: bound
      // prod p^(3/(p-1)) <= m^(3/2^20) by twenty upper square roots.
      Dyadic c(m * m * m);
      for (int s = 0; s < 20; ++s) c = root_up(c, 2, frac_bits + 8);
      out = mul_up(out, c);
    }
  }
  return out;
}

BoundsReport effective_bounds(const Integer& delta, const Dyadic& root_bound,
                              unsigned frac_bits) {
  if (delta < 1)
    throw std::invalid_argument("effective_bounds: delta >= 1 required");
  BoundsReport rep;
  rep.delta = delta;
  rep.delta_cubed_up = delta_cubed_upper(delta, frac_bits);
  rep.root_bound =
      (cmp(root_bound, Dyadic::one()) < 0) ? Dyadic::one() : root_bound;
  const Rational C0(2826, 1000);
  const Rational A(6076, 1000);
  const Rational m_exact =
      C0 * Rational(delta * delta * delta) * rep.delta_cubed_up.to_rational();
  rep.M = ceil_q(m_exact);
  const Rational n_exact = A * rep.root_bound.to_rational() * Rational(rep.M);
  rep.N = ceil_q(n_exact);
  rep.sigma = (2 * rep.M + 1) * rep.N + 2 * rep.M;
  rep.prime_range_exceeded = rep.sigma >= (Integer(1) << 62);
  return rep;
}

BoundsReport effective_bounds_for(const IntPoly& R) {
  if (R.is_zero()) throw ZeroPolynomial();
  const Integer delta = abs(R.lc());
  const Dyadic B =
      (R.degree() >= 1) ? root_radius_upper(R) : Dyadic();
  return effective_bounds(delta, B);
}

}  // namespace pcurv
