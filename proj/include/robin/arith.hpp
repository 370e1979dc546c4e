#ifndef ROBIN_ARITH_HPP
#define ROBIN_ARITH_HPP

#include <cstdint>

#include <gmpxx.h>

#include "robin/bounded_real.hpp"
#include "robin/factorization.hpp"

namespace robin {

class PrimeTable;

/// Class membership flags for one integer.
/**
 * n = 1 sets every flag. hardy_ramanujan means the primes are exactly
 * 2, 3, ..., p_s with non-increasing exponents; in_set_s means
 * n = 3^a 5^b q^c with q >= 7 prime.
 */
struct NumberClass {
  bool odd = true;
  bool squarefree = true;
  bool squarefull = true;
  unsigned t = 2;
  bool t_free = true;
  bool hardy_ramanujan = true;
  bool in_set_s = true;
};

// sigma(n) exactly; throws WidthError if it does not fit 128 bits.
u128 sigma_exact(const Factorization& f);

// sigma(n)/n = prod (p^(e+1) - 1) / (p^e (p - 1)).
mpq_class sigma_over_n_exact(const Factorization& f);
BoundedReal sigma_over_n(const Factorization& f, Precision prec = kDefaultPrecision);

// n/phi(n) = prod p/(p - 1).
mpq_class phi_ratio_exact(const Factorization& f);
BoundedReal phi_ratio(const Factorization& f, Precision prec = kDefaultPrecision);

// Squarefree kernel: same primes, exponent 1.
Factorization kappa(const Factorization& f);

NumberClass classify(const Factorization& f, unsigned t = 2);

ExponentPattern exponent_pattern(const Factorization& f);

// m(e): p_i raised to e_i, the smallest integer with pattern e.
Factorization minimal_number(const ExponentPattern& pattern, const PrimeTable& table);

inline constexpr std::uint64_t kHarmonicCap = 10'000'000;

// h(n) = 1 + 1/2 + ... + 1/n by direct outward-rounded summation.
BoundedReal harmonic(std::uint64_t n, Precision prec = kDefaultPrecision,
                     std::uint64_t cap = kHarmonicCap);

// Running enclosure of h(n) for consecutive n, used by range scans.
class HarmonicCursor {
 public:
  // Positioned at n = 0 with h(0) = 0.
  explicit HarmonicCursor(Precision prec = kDefaultPrecision);
  // Resume from a known enclosure of h(n).
  HarmonicCursor(std::uint64_t n, const BoundedReal& h_n);
  HarmonicCursor(const HarmonicCursor&) = delete;
  HarmonicCursor& operator=(const HarmonicCursor&) = delete;
  ~HarmonicCursor();

  std::uint64_t position() const { return n_; }
  // Enclosure of h(position()).
  BoundedReal value() const;
  // Moves to position() + 1.
  void advance();

 private:
  std::uint64_t n_ = 0;
  Precision prec_;
  mpfr_t lo_, hi_, term_, exact_;
};

}  // namespace robin

#endif  // ROBIN_ARITH_HPP
