#ifndef ROBIN_SCAN_HPP
#define ROBIN_SCAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robin/bounded_real.hpp"
#include "robin/criteria.hpp"
#include "robin/factorization.hpp"

namespace robin {

class PrimeTable;

enum class ScanClassKind { All, Odd, Squarefree, Squarefull, TFree, HardyRamanujan };

struct ScanClass {
  ScanClassKind kind = ScanClassKind::All;
  unsigned t = 2;  // only meaningful for TFree

  // all, odd, squarefree, squarefull, tfree:<t>, hr
  std::string name() const;
  bool admits(const Factorization& f) const;
};

ScanClass parse_scan_class(std::string_view token);

struct ScanOptions {
  RefinePolicy policy;
  unsigned workers = 1;
  // Integers per work unit of a range scan.
  std::uint64_t chunk_size = 1u << 16;
};

struct ScanReport {
  std::string class_name;
  CriterionId criterion = CriterionId::Robin;
  std::uint64_t range_max = 0;
  std::vector<std::uint64_t> violators;
  std::uint64_t scanned_count = 0;
  std::vector<std::uint64_t> undecided;
  std::vector<std::string> notes;
};

// All members of the class in [1, xmax] that fail the criterion. Range
// classes are factored by a chunked sieve; squarefull and hr use their
// enumerators. Undecided verdicts are collected, not fatal. rs-upper is only
// defined for n >= 3, so 1 and 2 are skipped (and noted).
ScanReport scan_violators(const ScanClass& cls, CriterionId criterion, std::uint64_t xmax,
                          const PrimeTable& table, const ScanOptions& options = {});

// The 28 Robin exceptions up to 5040.
inline constexpr std::uint64_t kSetA[] = {1,  2,  3,  4,  5,  6,  8,   9,   10,  12,   16,   18,   20,   24,
                                          30, 36, 48, 60, 72, 84, 120, 180, 240, 360, 720, 840, 2520, 5040};

// Named violator lists for scan --expect: setA, odd-robin, odd-nicolas,
// squarefree-robin, squarefull-robin, squarefull-nicolas.
std::optional<std::vector<std::uint64_t>> expect_fixture(std::string_view name);
std::vector<std::string> expect_fixture_names();

struct QrPair {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  friend bool operator==(const QrPair&, const QrPair&) = default;
};

struct RqReport {
  std::uint64_t qmax = 0;
  std::size_t checked = 0;
  std::vector<QrPair> failures;   // ascending by (q, r)
  std::vector<QrPair> undecided;
  bool eleven_all_hold = false;   // 11 r satisfies Robin for every r in A
  bool matches_expected() const;
};

inline constexpr QrPair kExpectedRqFailures[] = {{7, 12}, {7, 120}, {7, 360}};

// Robin's inequality for r q, r in A and prime 7 <= q <= qmax.
RqReport verify_lemma2(std::uint64_t qmax, const PrimeTable& table, const RefinePolicy& policy = {});

struct SetSReport {
  std::uint64_t xmax = 0;
  std::size_t members = 0;
  std::vector<std::uint64_t> robin_failures;
  std::vector<std::uint64_t> nicolas_failures;
  std::vector<std::uint64_t> undecided;
  bool matches_expected() const;
};

inline constexpr std::uint64_t kExpectedSetSRobin[] = {1, 3, 5, 9};
inline constexpr std::uint64_t kExpectedSetSNicolas[] = {1, 3, 5, 9, 15};

// n = 3^a 5^b q^c with q >= 7 prime, n <= xmax.
SetSReport verify_set_s(std::uint64_t xmax, const PrimeTable& table, const RefinePolicy& policy = {});

struct PrimorialRow {
  std::size_t k = 0;
  std::uint64_t prime = 0;
  // n/phi(n) > e^gamma log log n, certified.
  Outcome exceeds = Outcome::Undecided;
  // n/phi(n) <= e^gamma L + 5/(2L); only evaluated for k >= 2.
  Outcome rs_upper = Outcome::Undecided;
};

struct PrimorialReport {
  std::size_t kmax = 0;
  std::vector<std::size_t> not_exceeding;  // k where the excess is not certified
  std::vector<std::size_t> rs_upper_failures;
  std::vector<std::size_t> undecided;
  std::vector<PrimorialRow> rows;
};

// Walks N_k = p_1 ... p_k for k <= kmax with running enclosures of
// N_k/phi(N_k) and theta(p_k); undecided rows are recomputed from scratch
// under the refine policy.
PrimorialReport primorial_nicolas_scan(std::size_t kmax, const PrimeTable& table,
                                       const RefinePolicy& policy = {});

}  // namespace robin

#endif  // ROBIN_SCAN_HPP
