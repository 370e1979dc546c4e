#ifndef ROBIN_CASCADE_HPP
#define ROBIN_CASCADE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "robin/bounded_real.hpp"
#include "robin/factorization.hpp"

namespace robin {

class PrimeTable;

// P_t(x) = prod_{p <= x} (1 - p^-t) / (1 - p^-1), each factor exact as
// (p^t - 1) / (p^(t-1) (p - 1)) before outward rounding.
BoundedReal p_t_product(unsigned t, std::uint64_t x, const PrimeTable& table,
                        Precision prec = kDefaultPrecision);

// t/(t-1) z^(1-t) + log(1 + 1/log^2 z) - log zeta(t). Once negative at z,
// no t-free violator can have its largest prime beyond z.
BoundedReal z0_expression(unsigned t, std::uint64_t z, const PrimeTable& table,
                          Precision prec = kDefaultPrecision);

struct Z0Result {
  std::uint64_t z0 = 0;
  Verdict at_z0;                       // expression < 0
  std::optional<Verdict> before_z0;    // expression >= 0 at z0 - 1, when z0 > 3
};

// Smallest z >= 3 where the expression is certified negative. Every earlier z
// must be certified non-negative; a straddle at the cap raises
// PrecisionCapError.
Z0Result find_z0(unsigned t, const PrimeTable& table, const RefinePolicy& policy = {});

// Certified sign of the expression at a given z (negative means Holds).
Verdict z0_negative_at(unsigned t, std::uint64_t z, const PrimeTable& table, const RefinePolicy& policy = {});

struct CascadeStep {
  std::uint64_t z_bound = 0;   // every candidate prime is < z_bound
  std::uint64_t anchor = 0;    // largest prime < z_bound
  BoundedReal p_value;         // P_t(anchor)
  BoundedReal next_bound;      // exp(P_t(anchor) e^-gamma)
};

struct CascadeTrace {
  unsigned t = 0;
  std::uint64_t z0 = 0;        // starting bound
  std::vector<CascadeStep> steps;
  std::uint64_t terminal_z = 0;
  // exp(P_t(terminal_z) e^-gamma) > terminal_z, certified.
  bool terminal_certified = false;
};

inline constexpr std::size_t kCascadeStepGuard = 10'000;

// Repeats z -> floor(exp(P_t(q) e^-gamma)) + 1, q the largest prime below z,
// until the anchor prime stops decreasing.
CascadeTrace cascade_down(unsigned t, std::uint64_t start_z, const PrimeTable& table,
                          Precision prec = kDefaultPrecision);

struct SmallCaseReport {
  BoundedReal constant;        // P_5(11)
  BoundedReal log_n_bound;     // exp(P_5(11) e^-gamma)
  bool log_bound_certified = false;  // log_n_bound < 13.55
  std::size_t candidates = 0;        // 2^a 3^b 5^c 7^d 11^e, exponents 1..4
  std::size_t in_range = 0;          // log n <= 13.55 + margin
  std::size_t above_5040 = 0;
  std::size_t holds = 0;
  std::vector<Factorization> failures;
  std::vector<Factorization> undecided;
  // Optional: every 5-free n <= exp(13.55) scanned for Robin violators.
  std::optional<std::vector<std::uint64_t>> extended_violators;
  bool passed() const;
};

inline constexpr double kSmallCaseLogBound = 13.55;

SmallCaseReport verify_thm5_smallcase(const PrimeTable& table, const RefinePolicy& policy = {},
                                      bool extended = false, unsigned workers = 1);

struct Prod73Report {
  Verdict verdict;             // 4 theta(73) < theta(20000)
  BoundedReal four_theta_73;
  BoundedReal theta_20000;
  Verdict theta_lower;         // theta(20000) > 0.84 * 20000
};

Prod73Report verify_prod73_vs_prod20000(const PrimeTable& table, const RefinePolicy& policy = {});

struct Lemma7Row {
  std::size_t m = 0;
  BoundedReal lhs;             // prod_{i<=m} p_i/(p_i - 1)
  BoundedReal rhs;             // e^gamma log(2 theta(p_m))
  Verdict inequality;          // lhs >= rhs
};

struct Lemma7Report {
  std::vector<Lemma7Row> rows;            // m = 1..25
  std::vector<std::size_t> chain_failures;  // m in 26..100 where the chain is not certified
  bool passed() const;
};

Lemma7Report verify_lemma7(const PrimeTable& table, const RefinePolicy& policy = {});

struct Thm8Report {
  BoundedReal bound;            // exp(exp(e^-gamma 35/8))
  bool bound_certified = false; // < 116145
  std::vector<std::uint64_t> nicolas_violators;
  std::vector<std::uint64_t> robin_violators;
  bool nicolas_matches = false;
  bool robin_matches = false;
  std::size_t undecided = 0;
  // robin_matches compares with {1,4,8,9,16,36}, which leaves out 72 (a
  // squarefull member of set A); it is reported but not required.
  bool passed() const { return bound_certified && nicolas_matches && undecided == 0; }
};

inline constexpr std::uint64_t kThm8Range = 116144;

Thm8Report verify_thm8_bound(const PrimeTable& table, const RefinePolicy& policy = {}, unsigned workers = 1);

}  // namespace robin

#endif  // ROBIN_CASCADE_HPP
