#ifndef PCURV_BENCH_HPP
#define PCURV_BENCH_HPP

/* Reproducible random-input benchmark for the decider.  One SplitMix64
   stream per run generates all inputs up front in case order, so the input
   set depends only on (degree, height_bits, seed, count) and rows are
   byte-identical across runs and thread counts (except time_ms). */

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pcurv/integer.hpp"
#include "pcurv/poly.hpp"

namespace pcurv {

// SplitMix64: add the golden-gamma constant, then two xor-shift-multiply
// mixing rounds; passes BigCrush and is trivially seedable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Uniform in [0, bound) by rejection (no modulo bias); bound >= 1.
std::uint64_t uniform_below(SplitMix64& g, std::uint64_t bound);

// Uniform in [-2^h, 2^h]; h <= 62.
Integer uniform_coeff(SplitMix64& g, unsigned h);

// One admissible random input: deg a = n-1, deg b = n (leading coefficients
// redrawn until nonzero), regenerated as a pair until gcd(a, b) = 1 and b is
// squarefree.  n >= 1.
std::pair<IntPoly, IntPoly> random_input(SplitMix64& g, long n, unsigned h);

struct BenchRow {
  long degree = 0;
  unsigned height_bits = 0;
  std::uint64_t seed = 0;
  std::size_t case_index = 0;
  std::string verdict;
  std::uint64_t witness_prime = 0;  // 0 = none
  double time_ms = 0.0;
};

// Runs the decider over `count` random inputs; budget caps the prime scan.
std::vector<BenchRow> run_bench(long degree, unsigned height_bits,
                                std::size_t count, std::uint64_t seed,
                                const Integer& budget = Integer(100000),
                                int threads = 1);

// Header "degree,height_bits,seed,case_index,verdict,witness_prime,time_ms";
// witness_prime is empty when there is none.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace pcurv

#endif
