#ifndef ROBIN_ENUMERATE_HPP
#define ROBIN_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "robin/bounded_real.hpp"
#include "robin/factorization.hpp"

namespace robin {

class PrimeTable;

struct Enumerated {
  std::uint64_t value = 1;
  Factorization factors;
};

// Hardy-Ramanujan integers 2^e1 3^e2 ... p_s^es with e1 >= ... >= es >= 1,
// plus n = 1, in ascending order. Depth-first over exponents with the partial
// product pruned against xmax.
std::vector<std::uint64_t> hr_enumerate(std::uint64_t xmax);
std::vector<Enumerated> hr_enumerate_factored(std::uint64_t xmax);

struct CensusEntry {
  Factorization factors;
  bool above_5040 = false;
  Verdict robin;
};

struct CensusReport {
  std::vector<CensusEntry> entries;  // ascending by value
  std::size_t total = 0;
  std::size_t above_5040 = 0;
  std::size_t holds_above_5040 = 0;
  std::vector<Factorization> fails_above_5040;
  std::vector<Factorization> undecided;
};

// 5-free Hardy-Ramanujan integers n > 1 with P(n) <= 73: exponent patterns of
// length 1..21 over the first 21 primes with entries in [1, 4]. Each entry
// carries its Robin verdict.
inline constexpr std::size_t kCensusPrimeCount = 21;
inline constexpr std::uint32_t kCensusMaxExponent = 4;
inline constexpr std::uint64_t kCensusPrimes[kCensusPrimeCount] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                                                  37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
CensusReport hr_5free_census(const RefinePolicy& policy = {});

// Squarefull n <= xmax generated once each as a^2 b^3 with b squarefree.
// Throws InternalError if the generator ever produces a value twice.
std::vector<std::uint64_t> squarefull_enumerate(std::uint64_t xmax);

struct PatternMaximum {
  Factorization maximizer;
  mpq_class exact_ratio;
  BoundedReal ratio;
  std::size_t assignments = 0;
  // No other assignment reaches the same ratio.
  bool unique = true;
};

// Brute force over every injective assignment of the first prime_budget
// primes to the pattern's positions; returns the sigma(n)/n maximizer.
inline constexpr std::size_t kPatternAssignmentBudget = 5'000'000;
PatternMaximum pattern_max_ratio(const ExponentPattern& pattern, std::size_t prime_budget,
                                 const PrimeTable& table, Precision prec = kDefaultPrecision);

struct DensityResult {
  std::uint64_t count = 0;
  std::uint64_t xmax = 0;
  BoundedReal density;
};

// Proportion of n <= xmax that are even and not squarefree.
DensityResult density_even_nonsquarefree(std::uint64_t xmax);

}  // namespace robin

#endif  // ROBIN_ENUMERATE_HPP
