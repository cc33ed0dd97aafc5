#include "pcurv/modpoly.hpp"

#include <algorithm>

namespace pcurv {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw NotInvertible();
  // extended Euclid on signed 128-bit accumulators
  __int128 t = 0, newt = 1;
  std::uint64_t r = p, newr = a;
  while (newr != 0) {
    std::uint64_t q = r / newr;
    __int128 tmp = t - static_cast<__int128>(q) * newt;
    t = newt;
    newt = tmp;
    std::uint64_t rtmp = r - q * newr;
    r = newr;
    newr = rtmp;
  }
  if (r != 1) throw NotInvertible();
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

ModPoly::ModPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs)
    : p(check(prime)), c(std::move(coeffs)) {
  for (auto& x : c) x %= p;
  trim();
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.p);
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = addmod(a[i], b[i], a.p);
  r.trim();
  return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.p);
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = submod(a[i], b[i], a.p);
  r.trim();
  return r;
}

namespace {

// Classical product below degree 32, Karatsuba above.
std::vector<std::uint64_t> mul_vec(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b,
                                   std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < 32) {
    std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    return r;
  }
  std::size_t m = (std::max(a.size(), b.size()) + 1) / 2;
  auto low = [&](const std::vector<std::uint64_t>& v) {
    return std::vector<std::uint64_t>(v.begin(),
                                      v.begin() + std::min(m, v.size()));
  };
  auto high = [&](const std::vector<std::uint64_t>& v) {
    return v.size() > m
               ? std::vector<std::uint64_t>(v.begin() + m, v.end())
               : std::vector<std::uint64_t>{};
  };
  auto addv = [&](const std::vector<std::uint64_t>& x,
                  const std::vector<std::uint64_t>& y) {
    std::vector<std::uint64_t> s(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::uint64_t v = i < x.size() ? x[i] : 0;
      if (i < y.size()) v = addmod(v, y[i], p);
      s[i] = v;
    }
    return s;
  };
  auto a0 = low(a), a1 = high(a), b0 = low(b), b1 = high(b);
  auto z0 = mul_vec(a0, b0, p);
  auto z2 = mul_vec(a1, b1, p);
  auto z1 = mul_vec(addv(a0, a1), addv(b0, b1), p);
  if (z1.size() < std::max(z0.size(), z2.size()))
    z1.resize(std::max(z0.size(), z2.size()), 0);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = submod(z1[i], z0[i], p);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = submod(z1[i], z2[i], p);
  std::vector<std::uint64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) r[i] = addmod(r[i], z0[i], p);
  for (std::size_t i = 0; i < z1.size(); ++i)
    r[i + m] = addmod(r[i + m], z1[i], p);
  for (std::size_t i = 0; i < z2.size(); ++i)
    r[i + 2 * m] = addmod(r[i + 2 * m], z2[i], p);
  return r;
}

// Product truncated to the first k coefficients.
std::vector<std::uint64_t> mul_vec_prefix(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b,
                                          std::size_t k, std::uint64_t p) {
  std::vector<std::uint64_t> ta(a.begin(),
                                a.begin() + std::min(a.size(), k));
  std::vector<std::uint64_t> tb(b.begin(),
                                b.begin() + std::min(b.size(), k));
  std::vector<std::uint64_t> r = mul_vec(ta, tb, p);
  if (r.size() > k) r.resize(k);
  return r;
}

}  // namespace

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.p);
  r.c = mul_vec(a.c, b.c, a.p);
  r.trim();
  return r;
}

ModPoly scalar_mul(const ModPoly& a, std::uint64_t s) {
  ModPoly r(a.p);
  s %= a.p;
  if (!s) return r;
  r.c = a.c;
  for (auto& x : r.c) x = mulmod(x, s, a.p);
  r.trim();
  return r;
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
  ModPoly r(p);
  r.c.resize(f.coeffs().size());
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  r.trim();
  return r;
}

ModPoly derivative(const ModPoly& f) {
  ModPoly r(f.p);
  if (f.degree() < 1) return r;
  r.c.resize(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i)
    r.c[i - 1] = mulmod(f.c[i], i % f.p, f.p);
  r.trim();
  return r;
}

std::uint64_t eval(const ModPoly& f, std::uint64_t x) {
  std::uint64_t acc = 0;
  x %= f.p;
  for (long i = f.degree(); i >= 0; --i)
    acc = addmod(mulmod(acc, x, f.p), f.c[i], f.p);
  return acc;
}

ModPoly make_monic(const ModPoly& f) {
  return scalar_mul(f, invmod(f.lc(), f.p));
}

std::pair<ModPoly, ModPoly> divrem_mod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw ZeroDenominator();
  ModPoly q(a.p), r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, 0);
  std::uint64_t binv = invmod(b.lc(), a.p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t k = r.degree() - b.degree();
    std::uint64_t coef = mulmod(r.lc(), binv, a.p);
    q.c[k] = coef;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      r.c[i + k] = submod(r.c[i + k], mulmod(coef, b.c[i], a.p), a.p);
    r.trim();
  }
  q.trim();
  return {q, r};
}

ModPoly rem(const ModPoly& a, const ModPoly& b) {
  return divrem_mod(a, b).second;
}

ModPoly gcd_monic(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return make_monic(a);
}

ModPoly taylor_shift(const ModPoly& f, std::uint64_t c) {
  c %= f.p;
  ModPoly r(f.p);
  for (long i = f.degree(); i >= 0; --i) {
    // r = r*(x + c) + f_i
    std::vector<std::uint64_t> nc(r.c.size() + 1, 0);
    for (std::size_t j = 0; j < r.c.size(); ++j) {
      nc[j + 1] = addmod(nc[j + 1], r.c[j], f.p);
      nc[j] = addmod(nc[j], mulmod(r.c[j], c, f.p), f.p);
    }
    nc[0] = addmod(nc[0], f.c[i], f.p);
    r.c = std::move(nc);
    r.trim();
  }
  return r;
}

ModPoly reverse(const ModPoly& f) {
  ModPoly r(f.p);
  r.c.assign(f.c.rbegin(), f.c.rend());
  r.trim();
  return r;
}

SeriesPrefix series_inverse(const ModPoly& b, std::size_t k) {
  if (b.is_zero() || b.c[0] == 0) throw NotInvertible();
  std::uint64_t p = b.p;
  std::vector<std::uint64_t> s{invmod(b.c[0], p)};
  std::size_t prec = 1;
  while (prec < k) {
    prec *= 2;
    // s <- s*(2 - b*s) mod x^prec
    std::vector<std::uint64_t> bs =
        mul_vec_prefix(b.c, s, prec, p);
    for (auto& x : bs) x = x ? p - x : 0;  // -b*s
    if (bs.empty()) bs.resize(1, 0);
    bs[0] = addmod(bs[0], 2 % p, p);
    s = mul_vec_prefix(s, bs, prec, p);
  }
  s.resize(k, 0);
  return SeriesPrefix{p, std::move(s)};
}

SeriesPrefix series_div(const ModPoly& num, const ModPoly& den,
                        std::size_t k) {
  SeriesPrefix inv = series_inverse(den, k);
  std::vector<std::uint64_t> r =
      mul_vec_prefix(num.c, inv.c, k, num.p);
  r.resize(k, 0);
  return SeriesPrefix{num.p, std::move(r)};
}

ModPoly quotient_pow(const ModPoly& base, const Integer& e,
                     const ModPoly& f) {
  if (f.degree() < 1) throw std::domain_error("modulus must be nonconstant");
  ModPoly fm = make_monic(f);
  ModPoly result(f.p);
  result.c = {1 % f.p};
  result.trim();
  if (sgn(e) == 0) return rem(result, fm);
  ModPoly sq = base;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = rem(result * sq, fm);
    if (i + 1 < bits) sq = rem(sq * sq, fm);
  }
  return result;
}

namespace {

// Every p-th coefficient; pre: all other coefficients vanish.
ModPoly frobenius_descend(const ModPoly& f) {
  ModPoly r(f.p);
  for (std::size_t i = 0; i < f.c.size(); i += f.p) r.c.push_back(f.c[i]);
  r.trim();
  return r;
}

}  // namespace

ModPoly squarefree_part_mod_p(const ModPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  ModPoly g = make_monic(f);
  if (g.degree() == 0) return g;
  ModPoly d = derivative(g);
  if (d.is_zero()) return squarefree_part_mod_p(frobenius_descend(g));
  ModPoly h = gcd_monic(g, d);
  if (h.degree() == 0) return g;
  ModPoly w1 = divrem_mod(g, h).first;  // factors with multiplicity not 0 mod p
  // strip w1's irreducibles out of h; what remains is a p-th power
  ModPoly z = h;
  while (true) {
    ModPoly d2 = gcd_monic(z, w1);
    if (d2.degree() == 0) break;
    z = divrem_mod(z, d2).first;
  }
  if (z.degree() == 0) return w1;
  return w1 * squarefree_part_mod_p(frobenius_descend(z));
}

}  // namespace pcurv
