#ifndef ROBIN_CRITERIA_HPP
#define ROBIN_CRITERIA_HPP

#include <cstdint>
#include <string_view>

#include "robin/bounded_real.hpp"
#include "robin/factorization.hpp"

namespace robin {

enum class CriterionId { Robin, Nicolas, Lagarias, RosserSchoenfeldUpper };

// Stable tokens: robin, nicolas, lagarias, rs-upper.
std::string_view criterion_name(CriterionId id);
CriterionId parse_criterion(std::string_view token);

// Conventions for the smallest arguments. log log n is undefined at n = 1 and
// negative at n = 2, so both n fail the strict criteria; at n = 1 the margin
// is -inf. This places 1 and 2 in the Robin exception set, as in the
// classical list of 28 exceptions up to 5040.
inline constexpr bool kOneSatisfiesRobin = false;
inline constexpr bool kTwoSatisfiesRobin = false;

// sigma(n)/n < e^gamma log log n.
Verdict robin_check(const Factorization& f, const RefinePolicy& policy = {});

// n/phi(n) < e^gamma log log n.
Verdict nicolas_check(const Factorization& f, const RefinePolicy& policy = {});

// sigma(n) <= h(n) + e^h(n) log h(n), non-strict. Needs n <= kHarmonicCap.
Verdict lagarias_check(std::uint64_t n, const RefinePolicy& policy = {});
// Same comparison with h(n) supplied (used by scans that carry h forward).
Verdict lagarias_check(const Factorization& f, const BoundedReal& harmonic_n);

// n/phi(n) <= e^gamma log log n + 5/(2 log log n), non-strict, n >= 3.
Verdict rs_upper_check(const Factorization& f, const RefinePolicy& policy = {});

// Dispatch on id; Lagarias needs the value of f to fit 64 bits.
Verdict check(CriterionId id, const Factorization& f, const RefinePolicy& policy = {});

}  // namespace robin

#endif  // ROBIN_CRITERIA_HPP
