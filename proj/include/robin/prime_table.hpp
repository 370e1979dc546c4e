#ifndef ROBIN_PRIME_TABLE_HPP
#define ROBIN_PRIME_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "robin/bounded_real.hpp"

namespace robin {

class Factorization;

struct SieveOptions {
  // Bytes per sieve segment (one byte per odd number).
  std::size_t segment_bytes = 1u << 15;
  // Largest limit accepted; 10^9 keeps the prime list under ~200 MB.
  std::uint64_t max_limit = 1'000'000'000;
};

/// All primes up to an inclusive limit, ascending.
/**
 * Built once by a segmented, odd-only sieve of Eratosthenes and immutable
 * afterwards, so a single table can be shared by any number of threads.
 */
class PrimeTable {
 public:
  PrimeTable(std::uint64_t limit, const SieveOptions& options = {});

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  // k-th prime, 1-based: nth(1) == 2.
  std::uint64_t nth(std::size_t k) const;

  // pi(x) for x <= limit.
  std::size_t count_up_to(std::uint64_t x) const;
  bool is_prime(std::uint64_t x) const;
  // Largest prime strictly below x, if the table has one.
  std::optional<std::uint64_t> prime_below(std::uint64_t x) const;
  // Largest prime <= x.
  std::optional<std::uint64_t> prime_at_most(std::uint64_t x) const;

 private:
  void require_in_range(std::uint64_t x) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

PrimeTable build_table(std::uint64_t limit, const SieveOptions& options = {});

// Chebyshev theta(x) = sum of log p over p <= x.
BoundedReal theta(std::uint64_t x, const PrimeTable& table, Precision prec = kDefaultPrecision);

// Sum of 1/p over p <= x, each term rounded outward.
BoundedReal prime_recip_sum(std::uint64_t x, const PrimeTable& table,
                            Precision prec = kDefaultPrecision);

// Product of the first k primes as a factorization.
Factorization primorial_fact(std::size_t k, const PrimeTable& table);

struct ReciprocalBoundReport {
  std::uint64_t first_prime = 0;
  std::uint64_t last_prime = 0;
  std::size_t primes_checked = 0;
  std::vector<std::uint64_t> violations;
  std::vector<std::uint64_t> undecided;
  // Smallest certified gap (log log p + gamma) - sum, lower bound.
  double min_margin = 0.0;
  std::uint64_t min_margin_prime = 0;

  bool passed() const { return violations.empty() && undecided.empty(); }
};

// Checks sum_{p<=x} 1/p < log log x + gamma at every prime x in [from, to].
// The left side only jumps at primes and the right side increases, so prime
// points cover the whole real interval.
ReciprocalBoundReport verify_reciprocal_sum_bound(std::uint64_t from, std::uint64_t to,
                                                  const PrimeTable& table,
                                                  const RefinePolicy& policy = {},
                                                  unsigned workers = 1);

// Certified B + 2(1 + log 4)/log x < gamma.
Verdict verify_mertens_gap(std::uint64_t x, const RefinePolicy& policy = {});

}  // namespace robin

#endif  // ROBIN_PRIME_TABLE_HPP
