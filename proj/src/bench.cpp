#include "pcurv/bench.hpp"

#include <chrono>
#include <iomanip>
#include <stdexcept>

#include "pcurv/deciders.hpp"
#include "pcurv/resultants.hpp"

namespace pcurv {

std::uint64_t uniform_below(SplitMix64& g, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  // Reject the partial copy of [0, bound) at the top of the 64-bit range:
  // accepting v >= 2^64 mod bound leaves a multiple of bound many values.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t v = g.next();
    if (v >= threshold) return v % bound;
  }
}

Integer uniform_coeff(SplitMix64& g, unsigned h) {
  if (h > 62) throw std::invalid_argument("uniform_coeff: height > 62 bits");
  // |range| = 2^(h+1) + 1 values, centered at zero.
  const std::uint64_t bound = (std::uint64_t(1) << (h + 1)) + 1;
  const std::uint64_t r = uniform_below(g, bound);
  Integer v(static_cast<unsigned long>(r));
  v -= Integer(1) << h;
  return v;
}

namespace {

// Degree exactly d: d+1 draws in coefficient order, leading one redrawn
// until nonzero so every sample has the same degree.
IntPoly random_poly_exact(SplitMix64& g, long d, unsigned h) {
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = uniform_coeff(g, h);
  while (c[static_cast<std::size_t>(d)] == 0)
    c[static_cast<std::size_t>(d)] = uniform_coeff(g, h);
  return IntPoly(std::move(c));
}

}  // namespace

std::pair<IntPoly, IntPoly> random_input(SplitMix64& g, long n, unsigned h) {
  if (n < 1) throw std::invalid_argument("random_input: degree must be >= 1");
  for (;;) {
    IntPoly a = random_poly_exact(g, n - 1, h);
    IntPoly b = random_poly_exact(g, n, h);
    // Admissibility: a/b in lowest terms with squarefree denominator.  The
    // whole pair is regenerated on failure to keep the stream position a
    // function of the accepted prefix only.
    if (gcd_z(a, b).degree() != 0) continue;
    if (delta_of(b) == 0) continue;
    return {std::move(a), std::move(b)};
  }
}

std::vector<BenchRow> run_bench(long degree, unsigned height_bits,
                                std::size_t count, std::uint64_t seed,
                                const Integer& budget, int threads) {
  SplitMix64 g(seed);
  // All inputs come from one stream, generated up front in case order, so
  // case k's input never depends on how earlier cases were *decided*.
  std::vector<std::pair<IntPoly, IntPoly>> inputs;
  inputs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    inputs.push_back(random_input(g, degree, height_bits));

  std::vector<BenchRow> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto start = std::chrono::steady_clock::now();
    HondaResult res = decide_honda(to_rat(inputs[i].first),
                                   to_rat(inputs[i].second), budget, threads);
    const auto stop = std::chrono::steady_clock::now();

    BenchRow row;
    row.degree = degree;
    row.height_bits = height_bits;
    row.seed = seed;
    row.case_index = i;
    row.verdict = verdict_string(res.verdict.kind);
    row.witness_prime = res.verdict.witness_prime;
    row.time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "degree,height_bits,seed,case_index,verdict,witness_prime,time_ms\n";
  for (const BenchRow& r : rows) {
    os << r.degree << ',' << r.height_bits << ',' << r.seed << ','
       << r.case_index << ',' << r.verdict << ',';
    if (r.witness_prime != 0) os << r.witness_prime;
    os << ',' << std::fixed << std::setprecision(3) << r.time_ms << '\n';
  }
}

}  // namespace pcurv
