#include "pcurv/hermite_pade.hpp"

#include <stdexcept>

#include "pcurv/errors.hpp"

namespace pcurv {

namespace {

const RatPoly& one_poly() {
  static const RatPoly one(std::vector<Rational>{Rational(1)});
  return one;
}

}  // namespace

AlphaRat make_alpha_rat(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw ZeroDenominator();
  AlphaRat r;
  if (num.is_zero()) {
    r.num = RatPoly();
    r.den = one_poly();
    return r;
  }
  const RatPoly g = poly_gcd_q(num, den);
  if (g.degree() > 0) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  const Rational s = den.lc();
  r.num = scalar_mul(num, Rational(Rational(1) / s));
  r.den = scalar_mul(den, Rational(Rational(1) / s));
  return r;
}

AlphaRat operator+(const AlphaRat& a, const AlphaRat& b) {
  return make_alpha_rat(a.num * b.den + b.num * a.den, a.den * b.den);
}

AlphaRat operator*(const AlphaRat& a, const AlphaRat& b) {
  return make_alpha_rat(a.num * b.num, a.den * b.den);
}

AlphaRat inverse(const AlphaRat& a) {
  if (a.is_zero()) throw ZeroDenominator();
  return make_alpha_rat(a.den, a.num);
}

RatPoly binom_alpha(long k, long s, long r) {
  if (r < 0) throw std::invalid_argument("binom_alpha: r >= 0 required");
  RatPoly prod = one_poly();
  for (long t = 0; t < r; ++t) {
    const RatPoly factor(
        std::vector<Rational>{Rational(s - t), Rational(k)});
    prod = prod * factor;
  }
  return scalar_mul(
      prod, Rational(Rational(1) /
                     Rational(factorial_int(static_cast<unsigned long>(r)))));
}

namespace {

// Weights of the approximant in the (1-z)^k basis.  Writing each
// P_i(z) = sum_k q_{i,k} (1-z)^k turns the remainder into
//   sum_{i,k} q_{i,k} (1-z)^{x_{i,k}},  x_{i,k} = i*alpha + k,
// a generalized exponential sum over the (2M+1)(N+1) = sigma+1 nodes
// x_{i,k}.  Vanishing to order sigma at z = 0 means the first sigma
// derivatives vanish at 1, i.e. sum q_{i,k} f(x_{i,k}) = 0 for every
// polynomial f of degree < sigma -- which pins q (up to scale) as the
// divided-difference weights 1/prod(x_{i,k} - x_{j,l}).  Normalizing the
// order-sigma coefficient to N!^(2M+1)/sigma! gives
//   q_{i,k} = (-1)^(sigma+N-k) C(N,k)
//             / ((N+1)^(2M) prod_{j != i} C((i-j)alpha + k, N+1)).
std::vector<std::vector<AlphaRat>> hp_weights(long M, long N) {
  const long sigma = (2 * M + 1) * N + 2 * M;
  const Integer scale =
      pow_int(Integer(N + 1), static_cast<unsigned long>(2 * M));
  std::vector<std::vector<AlphaRat>> q(static_cast<std::size_t>(2 * M + 1));
  for (long i = 0; i <= 2 * M; ++i) {
    auto& row = q[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(N + 1));
    for (long k = 0; k <= N; ++k) {
      RatPoly den(std::vector<Rational>{Rational(scale)});
      for (long j = 0; j <= 2 * M; ++j) {
        if (j == i) continue;
        den = den * binom_alpha(i - j, k, N + 1);
      }
      Rational numv(binomial_int(static_cast<unsigned long>(N),
                                 static_cast<unsigned long>(k)));
      if ((sigma + N - k) % 2 != 0) numv = -numv;
      row[static_cast<std::size_t>(k)] =
          make_alpha_rat(RatPoly(std::vector<Rational>{numv}), den);
    }
  }
  return q;
}

}  // namespace

std::vector<std::vector<AlphaRat>> hp_coefficients(long M, long N) {
  if (M < 1 || N < 1)
    throw std::invalid_argument("hp_coefficients: M, N >= 1 required");
  // Convert the (1-z)^k-basis weights to ordinary z-basis coefficients:
  // (1-z)^k = sum_h C(k,h) (-z)^h, so p_{i,h} = (-1)^h sum_k C(k,h) q_{i,k}.
  const auto q = hp_weights(M, N);
  std::vector<std::vector<AlphaRat>> p(static_cast<std::size_t>(2 * M + 1));
  for (long i = 0; i <= 2 * M; ++i) {
    auto& row = p[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(N + 1));
    for (long h = 0; h <= N; ++h) {
      AlphaRat sum;
      for (long k = h; k <= N; ++k) {
        const Rational c(binomial_int(static_cast<unsigned long>(k),
                                      static_cast<unsigned long>(h)));
        sum = sum + q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                        AlphaRat{RatPoly(std::vector<Rational>{c}), one_poly()};
      }
      if (h % 2 != 0 && !sum.is_zero()) sum.num = -sum.num;
      row[static_cast<std::size_t>(h)] = sum;
    }
  }
  return p;
}

HPCertificate hp_verify(long M, long N) {
  if (M < 1 || N < 1)
    throw std::invalid_argument("hp_verify: M, N >= 1 required");
  const long sigma = (2 * M + 1) * N + 2 * M;
  if (sigma > 40)
    throw std::invalid_argument(
        "hp_verify: sigma = (2M+1)N + 2M must not exceed 40");

  HPCertificate cert;
  cert.M = M;
  cert.N = N;
  cert.sigma = sigma;
  cert.lead =
      Rational(pow_int(factorial_int(static_cast<unsigned long>(N)),
                       static_cast<unsigned long>(2 * M + 1))) /
      Rational(factorial_int(static_cast<unsigned long>(sigma)));
  cert.p = hp_coefficients(M, N);

  // Check 1, z-series form: the coefficient of z^m in
  // sum_i P_i(z) (1-z)^(i alpha) is
  //   c_m = sum_i sum_h (-1)^(m-h) p_{i,h} C(i alpha, m-h);
  // it must vanish for m < sigma and equal the lead at m = sigma (the
  // m = sigma instance is the explicit first-nonzero-coefficient formula).
  for (long m = 0; m <= sigma; ++m) {
    AlphaRat cm;
    for (long i = 0; i <= 2 * M; ++i) {
      for (long h = 0; h <= std::min(m, N); ++h) {
        RatPoly b = binom_alpha(i, 0, m - h);
        if ((m - h) % 2 != 0) b = -b;
        const AlphaRat term =
            cert.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)] *
            AlphaRat{std::move(b), one_poly()};
        cm = cm + term;
      }
    }
    if (m < sigma) {
      if (!cm.is_zero())
        throw IdentityViolation("hp_verify: low-order coefficient nonzero");
    } else {
      const bool ok = cm.den.degree() == 0 && cm.num.degree() == 0 &&
                      !cm.num.is_zero() && cm.num[0] == cert.lead;
      if (!ok)
        throw IdentityViolation("hp_verify: leading coefficient mismatch");
    }
  }

  // Check 2, node form (independent of the series expansion): with
  // x_{i,k} = i alpha + k, the weights satisfy
  //   sum_{i,k} q_{i,k} C(x_{i,k}, r) = 0 for r < sigma, and
  //   = (-1)^sigma * lead at r = sigma,
  // because the divided difference of a degree-r polynomial over the
  // sigma+1 distinct nodes is 0 (r < sigma) resp. its leading coefficient.
  const auto q = hp_weights(M, N);
  for (long r = 0; r <= sigma; ++r) {
    AlphaRat sr;
    for (long i = 0; i <= 2 * M; ++i)
      for (long k = 0; k <= N; ++k) {
        const AlphaRat term =
            q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
            AlphaRat{binom_alpha(i, k, r), one_poly()};
        sr = sr + term;
      }
    if (r < sigma) {
      if (!sr.is_zero())
        throw IdentityViolation("hp_verify: node identity violated");
    } else {
      Rational want = cert.lead;
      if (sigma % 2 != 0) want = -want;
      const bool ok = sr.den.degree() == 0 && sr.num.degree() == 0 &&
                      !sr.num.is_zero() && sr.num[0] == want;
      if (!ok)
        throw IdentityViolation("hp_verify: node normalization mismatch");
    }
  }
  return cert;
}

}  // namespace pcurv
