#ifndef PCURV_PRIMES_HPP
#define PCURV_PRIMES_HPP

/* Streaming prime generation by a segmented sieve of Eratosthenes (odd
   numbers only); base primes grow on demand. */

#include <cstdint>
#include <vector>

namespace pcurv {

class PrimeIter {
 public:
  explicit PrimeIter(std::uint64_t start = 2);

  // Next prime in increasing order.
  std::uint64_t next();

 private:
  void refill();
  void extend_base(std::uint64_t need);

  std::vector<std::uint64_t> base_;       // primes up to base_limit_
  std::uint64_t base_limit_ = 0;
  std::uint64_t segment_lo_ = 0;          // first candidate of next segment
  std::vector<std::uint64_t> buffer_;     // primes of the current segment
  std::size_t pos_ = 0;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace pcurv

#endif
