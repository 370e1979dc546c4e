#ifndef ROBIN_FACTORIZATION_HPP
#define ROBIN_FACTORIZATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "robin/bounded_real.hpp"

namespace robin {

class PrimeTable;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact prime-power representation of a positive integer.
/**
 * Entries are sorted by strictly increasing prime with exponents >= 1; the
 * empty factorization is n = 1. Criteria take factorizations rather than
 * integers so primorial-scale arguments never have to be materialized.
 */
class Factorization {
 public:
  Factorization() = default;
  // Validates ordering and exponents; primality of the bases is the caller's
  // contract (factorize and parse_factorization check it).
  explicit Factorization(std::vector<PrimePower> entries);

  std::span<const PrimePower> entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  // omega(n) and Omega(n).
  std::size_t distinct_primes() const { return entries_.size(); }
  std::uint64_t total_exponent() const;
  // Largest prime factor P(n); 1 for n = 1.
  std::uint64_t largest_prime() const;
  std::uint32_t exponent_of(std::uint64_t prime) const;

  // n itself when it fits in 128 bits.
  std::optional<u128> value() const;
  // True when n > bound (works for any size).
  bool exceeds(std::uint64_t bound) const;
  // log n = sum e_i log p_i.
  BoundedReal log_value(Precision prec = kDefaultPrecision) const;

  Factorization& operator*=(const Factorization& other);
  friend Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }
  friend bool operator==(const Factorization&, const Factorization&) = default;

  // "2^4*3^2*5*7", or "1".
  std::string to_string() const;

 private:
  std::vector<PrimePower> entries_;
};

/// Exponents of n sorted non-increasing.
class ExponentPattern {
 public:
  ExponentPattern() = default;
  explicit ExponentPattern(std::vector<std::uint32_t> exponents);

  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  bool empty() const { return exps_.empty(); }
  friend bool operator==(const ExponentPattern&, const ExponentPattern&) = default;
  friend auto operator<=>(const ExponentPattern&, const ExponentPattern&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_u64(std::uint64_t n);

Factorization factorize(std::uint64_t n, const PrimeTable& table);

// Accepts "5040" (factored with the table) or a literal such as
// "2^4*3^2*5*7". Bases of a literal must be prime; repeated bases merge.
Factorization parse_factorization(std::string_view text, const PrimeTable& table);

std::string to_string(u128 value);

}  // namespace robin

#endif  // ROBIN_FACTORIZATION_HPP
