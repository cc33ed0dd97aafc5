#include "pcurv/primes.hpp"

#include <algorithm>
#include <cmath>

namespace pcurv {

namespace {
constexpr std::uint64_t kSegmentSpan = 1u << 20;  // numbers per segment
}

PrimeIter::PrimeIter(std::uint64_t start) {
  segment_lo_ = start < 2 ? 2 : start;
  extend_base(1 << 16);
}

void PrimeIter::extend_base(std::uint64_t need) {
  if (need <= base_limit_) return;
  std::uint64_t limit = std::max<std::uint64_t>(need, 1 << 16);
  std::vector<bool> comp(limit + 1, false);
  base_.clear();
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    base_.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
  }
  base_limit_ = limit;
}

void PrimeIter::refill() {
  buffer_.clear();
  pos_ = 0;
  while (buffer_.empty()) {
    std::uint64_t lo = segment_lo_;
    std::uint64_t hi = lo + kSegmentSpan - 1;
    if (hi < lo) hi = ~0ull;  // saturate
    // base primes must cover sqrt(hi)
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(
                             static_cast<double>(hi))) +
                         2;
    extend_base(root);
    std::vector<bool> comp(hi - lo + 1, false);
    for (std::uint64_t p : base_) {
      if (p * p > hi) break;
      std::uint64_t first = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t m = first; m >= first && m <= hi; m += p)
        comp[m - lo] = true;
    }
    for (std::uint64_t v = lo; v <= hi; ++v) {
      if (v >= 2 && !comp[v - lo]) buffer_.push_back(v);
    }
    segment_lo_ = hi + 1;
  }
}

std::uint64_t PrimeIter::next() {
  if (pos_ >= buffer_.size()) refill();
  return buffer_[pos_++];
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  PrimeIter it;
  for (std::uint64_t p = it.next(); p <= n; p = it.next()) out.push_back(p);
  return out;
}

}  // namespace pcurv
