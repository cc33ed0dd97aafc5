/* pcurv: exact decision procedures for the differential equation
   y'(x) = u(x) y(x) with u a rational function over Q.

   Subcommands:
     decide      full decision: algebraic / non-algebraic / inconclusive
     pcurvature  the mod-p curvature check at one chosen prime
     bounds      the certified prime-search cutoff and its ingredients
     kronecker   effective splitting test for an integer polynomial
     hp-verify   symbolic verification of the approximant certificate
     bench       reproducible random-input benchmark (CSV)

   Exit codes: 0 = completed, 2 = unusable input, 3 = --strict and the
   verdict was inconclusive, 1 = internal failure. */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <gmp.h>

#include "pcurv/bench.hpp"
#include "pcurv/bounds.hpp"
#include "pcurv/deciders.hpp"
#include "pcurv/errors.hpp"
#include "pcurv/hermite_pade.hpp"
#include "pcurv/normal_form.hpp"
#include "pcurv/parser.hpp"
#include "pcurv/pcurvature.hpp"
#include "pcurv/report.hpp"
#include "pcurv/resultants.hpp"

namespace {

using namespace pcurv;

// The image of a rational constant in F_p; throws BadPrimeError when p
// divides the denominator.
std::uint64_t rational_mod_p(const Rational& q, std::uint64_t p) {
  const Integer num = q.get_num();
  const Integer den = q.get_den();
  const std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) throw BadPrimeError();
  return mulmod(n, invmod(d, p), p);
}

bool is_prime_u64(std::uint64_t p) {
  Integer z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

struct DecideOpts {
  std::string expr;
  std::string method = "pcurv";
  std::uint64_t max_prime = 1000000;
  int threads = 1;
  bool json = false;
  bool strict = false;
};

int run_decide(const DecideOpts& o) {
  if (o.method != "pcurv" && o.method != "roots")
    throw std::invalid_argument("--method must be 'pcurv' or 'roots'");
  const RatFun f = parse_ratfun(o.expr);
  const HondaResult res =
      o.method == "roots"
          ? decide_by_roots(f.num, f.den)
          : decide_honda(f.num, f.den, Integer(o.max_prime), o.threads);
  if (o.json)
    std::cout << json_decide(res) << '\n';
  else
    std::cout << text_decide(res);
  if (o.strict && res.verdict.kind == VerdictKind::Inconclusive) return 3;
  return 0;
}

struct CurvOpts {
  std::string expr;
  std::uint64_t p = 0;
  bool naive = false;
  bool json = false;
};

int run_pcurvature(const CurvOpts& o) {
  if (!is_prime_u64(o.p)) throw std::invalid_argument("-p must be prime");
  const RatFun f = parse_ratfun(o.expr);

  if (f.num.is_zero()) {
    // u = 0: the curvature is identically zero; report without reduction.
    CurvatureCheck check;
    check.outcome = CurvOutcome::Zero;
    check.prefix = PCurvPrefix{o.p, 0, 0, {0}};
    std::cout << (o.json ? json_curvature(check, o.p) + "\n"
                         : text_curvature(check, o.p));
    return 0;
  }

  const NormalForm nf = normalize(f.num, f.den);

  if (o.naive) {
    // Defined for any u != 0 whose constant factor is reducible mod p.
    ModRatFun mr = curvature_naive(nf.a, nf.b, o.p);
    const std::uint64_t cbar = rational_mod_p(nf.c, o.p);
    mr.num = scalar_mul(mr.num, cbar);
    std::cout << (o.json ? json_curvature_naive(mr, o.p) + "\n"
                         : text_curvature_naive(mr, o.p));
    return 0;
  }

  // The fast check runs on the scaled pair (a, b); the constant c only
  // multiplies the checked prefix (c^p = c mod p), so zero-ness is shared
  // and the reported coefficients are those of u's own curvature root.
  if (classify(nf) != StructuralClass::Admissible)
    throw std::invalid_argument(
        "the fast check needs an admissible input (proper fraction, "
        "squarefree denominator); rerun with --naive");
  CurvatureCheck check = curvature_prefix(nf.a, nf.b, o.p);
  if (check.outcome != CurvOutcome::BadPrime && nf.c != 1) {
    std::uint64_t cbar;
    try {
      cbar = rational_mod_p(nf.c, o.p);
    } catch (const BadPrimeError&) {
      check = CurvatureCheck{};  // p divides c's denominator
      cbar = 0;
    }
    if (check.outcome != CurvOutcome::BadPrime) {
      for (std::uint64_t& v : check.prefix.coeffs) v = mulmod(v, cbar, o.p);
      check.outcome = check.prefix.all_zero() ? CurvOutcome::Zero
                                              : CurvOutcome::NonZero;
    }
  }
  std::cout << (o.json ? json_curvature(check, o.p) + "\n"
                       : text_curvature(check, o.p));
  return 0;
}

struct ExprOpts {
  std::string expr;
  bool json = false;
};

int run_bounds(const ExprOpts& o) {
  const RatFun f = parse_ratfun(o.expr);
  if (f.num.is_zero())
    throw std::invalid_argument("the cutoff is not defined for u = 0");
  const NormalForm nf = normalize(f.num, f.den);
  if (classify(nf) != StructuralClass::Admissible)
    throw std::invalid_argument(
        "the cutoff is defined for admissible inputs only (proper "
        "fraction, squarefree denominator)");
  const RTResultant rt = rothstein_trager(nf.a, nf.b);
  const BoundsReport rep = effective_bounds_for(rt.R);
  std::cout << (o.json ? json_bounds(rep) + "\n" : text_bounds(rep));
  return 0;
}

struct KronOpts {
  std::string expr;
  std::uint64_t max_prime = 1000000;
  int threads = 1;
  bool json = false;
};

int run_kronecker(const KronOpts& o) {
  IntPoly R = parse_intpoly(o.expr);
  if (R.is_zero())
    throw std::invalid_argument("the zero polynomial has no splitting type");
  // Roots are unchanged under negation; the library wants lc > 0.
  if (R.lc() < 0) R = -R;
  const KroneckerVerdict v =
      kronecker_decide(R, Integer(o.max_prime), o.threads);
  std::cout << (o.json ? json_kronecker(v) + "\n" : text_kronecker(v));
  return 0;
}

struct HpOpts {
  long M = 1;
  long N = 1;
  bool json = false;
};

int run_hp(const HpOpts& o) {
  const HPCertificate c = hp_verify(o.M, o.N);
  std::cout << (o.json ? json_hp(c) + "\n" : text_hp(c));
  return 0;
}

struct BenchOpts {
  long degree = 10;
  unsigned height_bits = 10;
  std::size_t count = 20;
  std::uint64_t seed = 1;
  std::uint64_t max_prime = 100000;
  int threads = 1;
  std::string csv_path;
  bool json = false;
};

int run_bench_cmd(const BenchOpts& o) {
  const std::vector<BenchRow> rows = run_bench(
      o.degree, o.height_bits, o.count, o.seed, Integer(o.max_prime),
      o.threads);
  if (o.json) {
    std::cout << json_bench(rows) << '\n';
  } else if (o.csv_path.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(o.csv_path);
    if (!out) throw std::invalid_argument("cannot open " + o.csv_path);
    write_csv(out, rows);
    std::cerr << "wrote " << rows.size() << " rows to " << o.csv_path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides whether all solutions of y' = u(x) y are algebraic, for "
      "u a rational function over Q, by exact mod-p curvature checks"};
  app.require_subcommand(1);

  DecideOpts dec;
  CLI::App* sub_decide =
      app.add_subcommand("decide", "Decide algebraicity of y' = u y");
  sub_decide->add_option("u", dec.expr, "u as an expression in x, e.g. \"(2*x+1)/(x^2+x+1)\" or \"2*x+1;x^2+x+1\"")
      ->required();
  sub_decide->add_option("--method", dec.method,
                         "pcurv (prime scan, default) or roots "
                         "(rational-residue oracle)");
  sub_decide->add_option("--max-prime", dec.max_prime,
                         "prime scan budget (default 1000000)");
  sub_decide->add_option("--threads", dec.threads,
                         "worker threads for the scan; 0 = all cores");
  sub_decide->add_flag("--json", dec.json, "machine-readable output");
  sub_decide->add_flag("--strict", dec.strict,
                       "exit 3 when the verdict is inconclusive");

  CurvOpts curv;
  CLI::App* sub_curv = app.add_subcommand(
      "pcurvature", "Check whether the p-curvature vanishes at one prime");
  sub_curv->add_option("u", curv.expr, "u as an expression in x")->required();
  sub_curv->add_option("-p,--prime", curv.p, "the prime to check")
      ->required();
  sub_curv->add_flag("--naive", curv.naive,
                     "use the derivative-recurrence reference path");
  sub_curv->add_flag("--json", curv.json, "machine-readable output");

  ExprOpts bnd;
  CLI::App* sub_bounds = app.add_subcommand(
      "bounds", "Report the certified prime-search cutoff sigma");
  sub_bounds->add_option("u", bnd.expr, "u as an expression in x")->required();
  sub_bounds->add_flag("--json", bnd.json, "machine-readable output");

  KronOpts kron;
  CLI::App* sub_kron = app.add_subcommand(
      "kronecker", "Does an integer polynomial split over Q?");
  sub_kron->add_option("R", kron.expr, "polynomial with integer coefficients")
      ->required();
  sub_kron->add_option("--max-prime", kron.max_prime,
                       "prime scan budget (default 1000000)");
  sub_kron->add_option("--threads", kron.threads,
                       "worker threads for the scan; 0 = all cores");
  sub_kron->add_flag("--json", kron.json, "machine-readable output");

  HpOpts hp;
  CLI::App* sub_hp = app.add_subcommand(
      "hp-verify", "Verify the simultaneous-approximant certificate");
  sub_hp->add_option("-M", hp.M, "row parameter (>= 1)")->required();
  sub_hp->add_option("-N", hp.N, "order parameter (>= 1)")->required();
  sub_hp->add_flag("--json", hp.json, "machine-readable output");

  BenchOpts bench;
  CLI::App* sub_bench = app.add_subcommand(
      "bench", "Time the decider on reproducible random inputs");
  sub_bench->add_option("--degree", bench.degree,
                        "denominator degree (default 10)");
  sub_bench->add_option("--height-bits", bench.height_bits,
                        "coefficients drawn from [-2^h, 2^h] (default 10)");
  sub_bench->add_option("--count", bench.count, "number of cases (default 20)");
  sub_bench->add_option("--seed", bench.seed, "RNG seed (default 1)");
  sub_bench->add_option("--max-prime", bench.max_prime,
                        "per-case scan budget (default 100000)");
  sub_bench->add_option("--threads", bench.threads,
                        "worker threads per case; 0 = all cores");
  sub_bench->add_option("--csv", bench.csv_path,
                        "write CSV to this file instead of stdout");
  sub_bench->add_flag("--json", bench.json, "rows as JSON instead of CSV");

  int rc = 0;
  sub_decide->callback([&] { rc = run_decide(dec); });
  sub_curv->callback([&] { rc = run_pcurvature(curv); });
  sub_bounds->callback([&] { rc = run_bounds(bnd); });
  sub_kron->callback([&] { rc = run_kronecker(kron); });
  sub_hp->callback([&] { rc = run_hp(hp); });
  sub_bench->callback([&] { rc = run_bench_cmd(bench); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NoOrdinaryPoint& e) {
    std::cerr << "error: " << e.what()
              << " (every residue class is a pole; try --naive)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
