#ifndef ROBIN_ASYMPTOTICS_HPP
#define ROBIN_ASYMPTOTICS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "robin/bounded_real.hpp"
#include "robin/factorization.hpp"

namespace robin {

class PrimeTable;

// sigma(n)/(n log log n) and n/(phi(n) log log n); n >= 3.
BoundedReal f1(const Factorization& f, Precision prec = kDefaultPrecision);
BoundedReal f2(const Factorization& f, Precision prec = kDefaultPrecision);

enum class Variant { F1, F2 };

// Extremal sequences, all indexed by a prime x:
//   t_powerful        prod_{p<=x} p^(t-1)
//   odd_t_powerful    prod_{2<p<=x} p^(t-1)
//   primorial         prod_{p<=x} p
//   squarefull_squares prod_{p<=x} p^2
enum class Family { TPowerful, OddTPowerful, Primorial, SquarefullSquares };

std::string_view variant_name(Variant v);
std::string_view family_name(Family f);
Variant parse_variant(std::string_view token);
Family parse_family(std::string_view token);

// n at x for the family; t is ignored by primorial and squarefull_squares.
Factorization family_member(Family family, unsigned t, std::uint64_t x, const PrimeTable& table);

// Conjectured limsup along the family.
BoundedReal series_target(Variant variant, Family family, unsigned t, const PrimeTable& table,
                          Precision prec = kDefaultPrecision);

// Primes nearest to 10 * 2^k (ties go down) for 10 * 2^k <= xmax, plus the
// largest prime <= xmax; ascending and deduplicated.
std::vector<std::uint64_t> ratio_grid(std::uint64_t xmax, const PrimeTable& table);

struct RatioPoint {
  std::uint64_t x = 0;
  BoundedReal log_n;
  BoundedReal value;
};

struct RatioSeries {
  Variant variant = Variant::F1;
  Family family = Family::TPowerful;
  unsigned t = 2;
  std::vector<RatioPoint> points;
  BoundedReal target;
  std::vector<std::string> warnings;

  // |value - target| (midpoints) at the first and last grid point.
  double first_gap() const;
  double last_gap() const;
};

RatioSeries limsup_experiment(Variant variant, Family family, unsigned t, std::uint64_t xmax,
                              const PrimeTable& table, Precision prec = kDefaultPrecision,
                              unsigned workers = 1);

// sigma(n)/n <= prod_{p | n} (1 - p^-t)/(1 - p^-1) for t-free n, compared
// exactly.
Verdict tfree_ratio_bound(const Factorization& f, unsigned t);

}  // namespace robin

#endif  // ROBIN_ASYMPTOTICS_HPP
