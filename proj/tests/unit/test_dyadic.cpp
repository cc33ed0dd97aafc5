// Directed-rounding dyadic arithmetic.  Every _up operation must dominate
// the exact rational value and every _down operation must stay below it;
// the rounded results must also stay within the advertised relative error.
// Both sides are checked with exact rational arithmetic throughout.

#include <doctest.h>

#include <stdexcept>

#include <pcurv/bench.hpp>
#include <pcurv/dyadic.hpp>
#include <pcurv/integer.hpp>

using namespace pcurv;

namespace {

Rational rv(const Dyadic& d) { return d.to_rational(); }

Dyadic random_dyadic(SplitMix64& g) {
  Integer m = uniform_coeff(g, 40);
  if (m < 0) m = -m;
  const long e = static_cast<long>(uniform_below(g, 80)) - 40;
  return Dyadic(m, e);
}

Rational inv_pow2(unsigned k) {
  return Rational(1) / Rational(Integer(Integer(1) << k));
}

Rational rel_err_bound(unsigned prec) {
  // A few ulps at `prec` significant bits (the operations promise one
  // rounding step; the factor 4 is slack, the lower bounds stay exact).
  return Rational(4) * inv_pow2(prec - 1);
}

}  // namespace

TEST_CASE("construction, value, string form") {
  CHECK(Dyadic().is_zero());
  CHECK(rv(Dyadic()) == 0);
  CHECK(rv(Dyadic(Integer(3), -2)) == Rational(3, 4));
  CHECK(rv(Dyadic(Integer(3), 1)) == 6);
  CHECK(Dyadic(Integer(3), -2).str() == "3/4");
  CHECK(Dyadic(Integer(3), 1).str() == "6");
  CHECK(rv(Dyadic::one()) == 1);
  CHECK_THROWS_AS(Dyadic(Integer(-1), 0), std::invalid_argument);
  // Same value, different normalization, must compare equal.
  CHECK(cmp(Dyadic(Integer(8), -1), Dyadic(Integer(1), 2)) == 0);
}

TEST_CASE("cmp agrees with exact rational comparison") {
  SplitMix64 g(1);
  for (int iter = 0; iter < 200; ++iter) {
    const Dyadic a = random_dyadic(g), b = random_dyadic(g);
    const Rational ra = rv(a), rb = rv(b);
    const int want = ra < rb ? -1 : (ra == rb ? 0 : 1);
    CHECK(cmp(a, b) == want);
  }
}

TEST_CASE("round_up/round_down bracket the exact value tightly") {
  SplitMix64 g(2);
  for (int iter = 0; iter < 100; ++iter) {
    const Dyadic a = random_dyadic(g);
    for (const unsigned prec : {8u, 24u, 96u}) {
      const Dyadic up = round_up_bits(a, prec);
      const Dyadic dn = round_down_bits(a, prec);
      CHECK(rv(up) >= rv(a));
      CHECK(rv(dn) <= rv(a));
      if (!a.is_zero()) {
        CHECK(rv(up) <= rv(a) * (Rational(1) + rel_err_bound(prec)));
        CHECK(rv(dn) >= rv(a) * (Rational(1) - rel_err_bound(prec)));
      }
    }
  }
}

TEST_CASE("mul_up, add_up, square_down, div_up are one-sided and tight") {
  SplitMix64 g(3);
  for (int iter = 0; iter < 150; ++iter) {
    const Dyadic a = random_dyadic(g), b = random_dyadic(g);
    const Rational ra = rv(a), rb = rv(b);
    const Rational eps = rel_err_bound(kDyadicPrec);

    const Rational m = rv(mul_up(a, b));
    CHECK(m >= ra * rb);
    CHECK(m <= ra * rb * (Rational(1) + eps) + eps);

    const Rational s = rv(add_up(a, b));
    CHECK(s >= ra + rb);
    CHECK(s <= (ra + rb) * (Rational(1) + eps) + eps);

    const Rational q = rv(square_down(a));
    CHECK(q <= ra * ra);
    CHECK(q >= ra * ra * (Rational(1) - eps));

    if (!b.is_zero()) {
      const Rational d = rv(div_up(a, b));
      CHECK(d >= ra / rb);
      CHECK(d <= (ra / rb) * (Rational(1) + eps) + eps);
    }
  }
  CHECK(mul_up(Dyadic(), Dyadic(Integer(5))).is_zero());
  CHECK_THROWS_AS(div_up(Dyadic::one(), Dyadic()), std::invalid_argument);
}

TEST_CASE("root_up dominates the true k-th root and stays tight") {
  SplitMix64 g(4);
  for (int iter = 0; iter < 60; ++iter) {
    Dyadic a = random_dyadic(g);
    if (a.is_zero()) a = Dyadic::one();
    for (const unsigned long k : {1ul, 2ul, 3ul, 7ul}) {
      const Dyadic r = root_up(a, k, 48);
      // r^k >= a exactly.
      Rational pw(1);
      for (unsigned long i = 0; i < k; ++i) pw *= rv(r);
      CHECK(pw >= rv(a));
      // Tightness: (r / (1 + 2^-40))^k <= a, i.e. r is within a factor
      // (1 + 2^-40) of the true root (well inside the 48-bit request).
      Rational shrunk = rv(r) / (Rational(1) + inv_pow2(40));
      Rational pw2(1);
      for (unsigned long i = 0; i < k; ++i) pw2 *= shrunk;
      CHECK(pw2 <= rv(a));
    }
  }
  // Perfect power: cube root of 8 is 2.
  const Dyadic c = root_up(Dyadic(Integer(8)), 3);
  CHECK(rv(c) >= 2);
  CHECK(rv(c) <= Rational(2) * (Rational(1) + inv_pow2(40)));
  CHECK(root_up(Dyadic(), 5).is_zero());
  CHECK_THROWS_AS(root_up(Dyadic::one(), 0), std::invalid_argument);
}

TEST_CASE("ratio_up dominates num/den and stays tight") {
  SplitMix64 g(5);
  for (int iter = 0; iter < 100; ++iter) {
    Integer n = uniform_coeff(g, 50);
    if (n < 0) n = -n;
    Integer d = uniform_coeff(g, 50);
    if (d <= 0) d = -d + 1;
    const Rational exact = Rational(n) / Rational(d);
    const Rational up = rv(ratio_up(n, d, 64));
    CHECK(up >= exact);
    CHECK(up <= exact + inv_pow2(60));
  }
  CHECK_THROWS_AS(ratio_up(Integer(1), Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(ratio_up(Integer(-1), Integer(2)), std::invalid_argument);
}
