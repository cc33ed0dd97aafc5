#include "pcurv/deciders.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

#include "pcurv/errors.hpp"
#include "pcurv/modpoly.hpp"
#include "pcurv/pcurvature.hpp"
#include "pcurv/primes.hpp"
#include "pcurv/resultants.hpp"

namespace pcurv {

const char* verdict_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Algebraic:
      return "algebraic";
    case VerdictKind::NonAlgebraic:
      return "non-algebraic";
    case VerdictKind::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

const char* reason_string(Reason r) {
  switch (r) {
    case Reason::None:
      return nullptr;
    case Reason::DegreeViolation:
      return "degree-violation";
    case Reason::NonSquarefreeDenominator:
      return "non-squarefree-denominator";
    case Reason::IrrationalResidue:
      return "irrational-residue";
    case Reason::NonvanishingCurvature:
      return "nonvanishing-curvature";
  }
  return nullptr;
}

namespace {

/* ----- integer factorization ------------------------------------------- */

// Brent's variant of Pollard rho; n odd, composite, not a perfect power.
Integer rho_split(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    const auto f = [&](const Integer& v) { return (v * v + c) % n; };
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        g = gcd_int(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // The gcd batch overshot the cycle; replay one step at a time.
      do {
        ys = f(ys);
        g = gcd_int(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    // degenerate cycle for this increment; retry with the next one
  }
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  if (n < 1) throw std::invalid_argument("factor_integer: n >= 1 required");
  std::vector<std::pair<Integer, int>> out;
  if (n == 1) return out;

  const auto strip = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };

  strip(2);
  const Integer cap = Integer(1) << 20;
  for (Integer q = 3; q * q <= n && q <= cap; q += 2) strip(q);

  if (n > 1) {
    // Everything left has prime factors above 2^20; split with rho.
    std::vector<Integer> stack{n};
    std::vector<Integer> primes;
    while (!stack.empty()) {
      Integer m = std::move(stack.back());
      stack.pop_back();
      if (is_probable_prime(m)) {
        primes.push_back(std::move(m));
        continue;
      }
      if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
          Integer r;
          if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
            for (unsigned long i = 0; i < k; ++i) stack.push_back(r);
            break;
          }
        }
        continue;
      }
      const Integer d = rho_split(m);
      stack.push_back(m / d);
      stack.push_back(std::move(d));
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      out.emplace_back(primes[i], static_cast<int>(j - i));
      i = j;
    }
  }
  return out;
}

namespace {

// All positive divisors of n >= 1, unsorted.
std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

bool divides_or_zero(const Integer& d, const Integer& v) {
  if (d == 0) return v == 0;
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

void sort_pairs(std::vector<std::pair<Rational, int>>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const IntPoly& P) {
  if (P.is_zero()) throw ZeroPolynomial();
  std::vector<std::pair<Rational, int>> out;
  if (P.degree() == 0) return out;
  const IntPoly Pp = content_primitive(P).second;

  const auto multiplicity = [&](const Integer& s, const Integer& t) {
    RatPoly cur = to_rat(Pp);
    const RatPoly lin(std::vector<Rational>{Rational(-s), Rational(t)});
    int m = 0;
    for (;;) {
      auto [q, r] = divrem(cur, lin);
      if (!r.is_zero()) break;
      ++m;
      cur = std::move(q);
      if (cur.is_zero()) break;
    }
    return m;
  };

  // Each rational root appears exactly once in the squarefree part.
  IntPoly sf = divexact(Pp, gcd_z(Pp, derivative(Pp)));

  if (sf[0] == 0) {
    // Root 0: its multiplicity in P is the valuation at x.
    int v = 0;
    while (Pp[static_cast<std::size_t>(v)] == 0) ++v;
    out.emplace_back(Rational(0), v);
    std::vector<Integer> shifted(sf.coeffs().begin() + 1, sf.coeffs().end());
    sf = IntPoly(std::move(shifted));
  }
  if (sf.degree() < 1) {
    sort_pairs(out);
    return out;
  }

  const Integer c0 = abs(sf[0]);
  const Integer lcm_ = abs(sf.lc());
  const Integer m1 = eval(sf, Integer(1));
  const Integer mm1 = eval(sf, Integer(-1));
  const std::vector<Integer> nums = divisors_of(c0);
  const std::vector<Integer> dens = divisors_of(lcm_);

  for (const Integer& t : dens) {
    for (const Integer& s : nums) {
      if (gcd_int(s, t) != 1) continue;
      for (int sign : {1, -1}) {
        const Integer s0 = sign > 0 ? s : Integer(-s);
        // Cheap divisibility filters at x = 1 and x = -1.
        if (!divides_or_zero(t - s0, m1)) continue;
        if (!divides_or_zero(t + s0, mm1)) continue;
        if (eval_scaled(sf, s0, t) != 0) continue;
        out.emplace_back(make_rational(s0, t), multiplicity(s0, t));
      }
    }
  }
  sort_pairs(out);
  return out;
}

/* ----- deterministic chunked prime scan --------------------------------- */

namespace {

// Smallest prime p in [lo, hi] with fn(p) true, or 0.  fn is called
// concurrently on distinct primes when threads > 1; the result does not
// depend on the thread count.
template <typename F>
std::uint64_t chunked_prime_scan(std::uint64_t lo, std::uint64_t hi,
                                 int threads, F&& fn) {
  if (lo < 2) lo = 2;
  if (hi < lo) return 0;
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 1;
  }
  constexpr std::size_t kChunk = 1024;
  PrimeIter it(lo);
  std::vector<std::uint64_t> chunk;
  chunk.reserve(kChunk);
  bool exhausted = false;
  while (!exhausted) {
    chunk.clear();
    while (chunk.size() < kChunk) {
      const std::uint64_t p = it.next();
      if (p > hi) {
        exhausted = true;
        break;
      }
      chunk.push_back(p);
    }
    if (chunk.empty()) break;

    std::uint64_t found = 0;
    const std::size_t n = chunk.size();
    // No point spawning a thread for fewer than ~64 primes.
    int T = threads;
    const std::size_t max_useful = (n + 63) / 64;
    if (static_cast<std::size_t>(T) > max_useful)
      T = static_cast<int>(max_useful);
    if (T < 1) T = 1;
    if (T <= 1) {
      for (const std::uint64_t p : chunk) {
        if (fn(p)) {
          found = p;
          break;
        }
      }
    } else {
      // Contiguous stripes; each worker reports the first witness in its
      // stripe, and the minimum over stripes is the chunk's first witness.
      std::vector<std::uint64_t> wit(static_cast<std::size_t>(T), 0);
      std::vector<std::exception_ptr> errs(static_cast<std::size_t>(T));
      std::vector<std::thread> pool;
      const std::size_t block = (n + static_cast<std::size_t>(T) - 1) /
                                static_cast<std::size_t>(T);
      for (int t = 0; t < T; ++t) {
        pool.emplace_back([&, t]() {
          try {
            const std::size_t b0 = static_cast<std::size_t>(t) * block;
            const std::size_t b1 = std::min(n, b0 + block);
            for (std::size_t i = b0; i < b1; ++i) {
              if (fn(chunk[i])) {
                wit[static_cast<std::size_t>(t)] = chunk[i];
                return;
              }
            }
          } catch (...) {
            errs[static_cast<std::size_t>(t)] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& e : errs)
        if (e) std::rethrow_exception(e);
      for (const std::uint64_t w : wit)
        if (w != 0 && (found == 0 || w < found)) found = w;
    }
    if (found != 0) return found;
  }
  return 0;
}

// Budget validation shared by the scanning deciders.
void check_budget(const Integer& budget) {
  if (budget < 0)
    throw std::invalid_argument("prime budget must be nonnegative");
  if (budget >= Integer(kMaxPrime)) throw UnsupportedPrimeRange();
}

std::vector<std::pair<Rational, int>> scaled_residues(
    const Rational& c, const std::vector<std::pair<Rational, int>>& roots) {
  std::vector<std::pair<Rational, int>> res;
  res.reserve(roots.size());
  for (const auto& [r, m] : roots) res.emplace_back(c * r, m);
  sort_pairs(res);
  return res;
}

long total_multiplicity(const std::vector<std::pair<Rational, int>>& v) {
  long s = 0;
  for (const auto& [r, m] : v) s += m;
  return s;
}

// Structural short-circuits shared by both deciders; returns true when the
// result is already decided.
bool structural_gate(const NormalForm& nf, HondaResult& res) {
  switch (classify(nf)) {
    case StructuralClass::DegreeViolation:
      res.delta = 1;
      res.verdict.kind = VerdictKind::NonAlgebraic;
      res.verdict.reason = Reason::DegreeViolation;
      return true;
    case StructuralClass::NonSquarefree:
      res.delta = 0;
      res.verdict.kind = VerdictKind::NonAlgebraic;
      res.verdict.reason = Reason::NonSquarefreeDenominator;
      return true;
    case StructuralClass::Admissible:
      return false;
  }
  return false;
}

HondaResult zero_input_result() {
  HondaResult res;
  res.delta = 1;
  res.verdict.kind = VerdictKind::Algebraic;
  return res;
}

}  // namespace

HondaResult decide_by_roots(const NormalForm& nf) {
  HondaResult res;
  if (structural_gate(nf, res)) return res;
  const RTResultant rt = rothstein_trager(nf.a, nf.b);
  res.delta = rt.delta;
  const auto roots = rational_roots(rt.R);
  if (total_multiplicity(roots) == rt.R.degree()) {
    res.verdict.kind = VerdictKind::Algebraic;
    res.verdict.residues = scaled_residues(nf.c, roots);
  } else {
    res.verdict.kind = VerdictKind::NonAlgebraic;
    res.verdict.reason = Reason::IrrationalResidue;
  }
  return res;
}

HondaResult decide_by_roots(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) return zero_input_result();
  return decide_by_roots(normalize(num, den));
}

bool splits_mod_p(const IntPoly& R, std::uint64_t p) {
  if (R.is_zero()) throw ZeroPolynomial();
  ModPoly::check(p);
  if (mpz_fdiv_ui(R.lc().get_mpz_t(), p) == 0) throw BadPrimeError();
  const ModPoly Rb = reduce_mod(R, p);
  if (Rb.degree() < 1) return true;
  const ModPoly S = squarefree_part_mod_p(Rb);
  if (S.degree() < 1) return true;
  // All roots in F_p iff S divides x^p - x, i.e. x^p = x mod S.
  const ModPoly x = rem(ModPoly(p, {0, 1}), S);
  return quotient_pow(x, Integer(p), S) == x;
}

KroneckerVerdict kronecker_decide(const IntPoly& R, const Integer& budget,
                                  int threads) {
  if (R.is_zero()) throw ZeroPolynomial();
  if (R.lc() <= 0)
    throw std::invalid_argument("kronecker_decide: lc(R) > 0 required");
  check_budget(budget);

  KroneckerVerdict v;
  if (R.degree() == 0) {
    v.kind = SplitKind::SplitsOverQ;
    return v;
  }
  const Integer delta = R.lc();
  const BoundsReport rep = effective_bounds(delta, root_radius_upper(R));
  v.sigma = rep.sigma;
  const Integer hi = std::min(Integer(rep.sigma - 1), budget);
  v.checked_up_to = hi;

  const auto fn = [&](std::uint64_t p) {
    if (mpz_divisible_ui_p(delta.get_mpz_t(), p)) return false;
    return !splits_mod_p(R, p);
  };
  if (hi >= 2) {
    const std::uint64_t w = chunked_prime_scan(2, to_u64(hi), threads, fn);
    if (w != 0) {
      v.kind = SplitKind::NotSplit;
      v.witness_prime = w;
      return v;
    }
  }

  if (!rep.prime_range_exceeded && budget >= rep.sigma - 1) {
    // Complete scan below sigma: splitting everywhere certifies splitting
    // over Q, and the roots must all be rational.
    v.kind = SplitKind::SplitsOverQ;
    v.roots = rational_roots(R);
    if (total_multiplicity(v.roots) != R.degree())
      throw IdentityViolation("kronecker: complete scan but missing roots");
    return v;
  }
  // Budget exhausted before sigma: fall back to the exhaustive root oracle,
  // which is decisive either way.
  v.via_root_certificate = true;
  const auto roots = rational_roots(R);
  if (total_multiplicity(roots) == R.degree()) {
    v.kind = SplitKind::SplitsOverQ;
    v.roots = roots;
  } else {
    v.kind = SplitKind::NotSplit;
  }
  return v;
}

HondaResult decide_honda(const NormalForm& nf, const Integer& budget,
                         int threads) {
  check_budget(budget);
  HondaResult res;
  if (structural_gate(nf, res)) return res;

  const IntPoly& a = nf.a;
  const IntPoly& b = nf.b;
  const Integer delta = delta_of(b);
  res.delta = delta;

  const auto is_witness = [&](std::uint64_t p) {
    if (mpz_divisible_ui_p(delta.get_mpz_t(), p)) return false;  // bad prime
    try {
      return curvature_prefix(a, b, p, delta).outcome == CurvOutcome::NonZero;
    } catch (const NoOrdinaryPoint&) {
      // p <= deg of the reduced denominator: no ordinary expansion point in
      // F_p; fall back to the direct computation (cheap for such small p).
      return !curvature_naive(a, b, p).is_zero();
    }
  };

  // Phase 1: small primes first; the resultant is only computed when no
  // cheap witness exists.
  const Integer cap1 = std::min(delta, budget);
  std::uint64_t scanned_to = 0;
  if (cap1 >= 2) {
    scanned_to = to_u64(cap1);
    const std::uint64_t w = chunked_prime_scan(2, scanned_to, threads,
                                               is_witness);
    if (w != 0) {
      res.verdict.kind = VerdictKind::NonAlgebraic;
      res.verdict.reason = Reason::NonvanishingCurvature;
      res.verdict.witness_prime = w;
      return res;
    }
  }

  const RTResultant rt = rothstein_trager(a, b);
  if (rt.delta != delta)
    throw IdentityViolation("decide_honda: resultant lead mismatch");
  res.bounds = effective_bounds(delta, root_radius_upper(rt.R));
  res.has_bounds = true;
  res.verdict.sigma = res.bounds.sigma;
  res.verdict.has_sigma = true;
  res.verdict.prime_range_exceeded = res.bounds.prime_range_exceeded;

  // Phase 2: up to the decisive cutoff (or the budget, whichever is first).
  const Integer hi = std::min(Integer(res.bounds.sigma - 1), budget);
  if (hi > scanned_to) {
    const std::uint64_t w =
        chunked_prime_scan(scanned_to + 1, to_u64(hi), threads, is_witness);
    if (w != 0) {
      res.verdict.kind = VerdictKind::NonAlgebraic;
      res.verdict.reason = Reason::NonvanishingCurvature;
      res.verdict.witness_prime = w;
      return res;
    }
  }

  if (!res.bounds.prime_range_exceeded && budget >= res.bounds.sigma - 1) {
    // Vanishing curvature at every good prime below sigma: algebraic, and
    // the residues are the (rational) roots of the resultant, scaled back.
    const auto roots = rational_roots(rt.R);
    if (total_multiplicity(roots) != rt.R.degree())
      throw IdentityViolation("decide_honda: complete scan but missing roots");
    res.verdict.kind = VerdictKind::Algebraic;
    res.verdict.residues = scaled_residues(nf.c, roots);
  } else {
    res.verdict.kind = VerdictKind::Inconclusive;
    res.verdict.checked_up_to = budget;
  }
  return res;
}

HondaResult decide_honda(const RatPoly& num, const RatPoly& den,
                         const Integer& budget, int threads) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) return zero_input_result();
  return decide_honda(normalize(num, den), budget, threads);
}

}  // namespace pcurv
