#include "robin/prime_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "robin/constants.hpp"
#include "robin/errors.hpp"
#include "robin/factorization.hpp"
#include "robin/parallel.hpp"

namespace robin {

namespace {

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Adds 1/p to [lo, hi] with outward rounding. `exact_p` has 64 bits so the
// conversion of p is exact at any working precision.
void add_reciprocal(mpfr_t lo, mpfr_t hi, mpfr_t term, mpfr_t exact_p, unsigned long p) {
  mpfr_set_ui(exact_p, p, MPFR_RNDN);
  mpfr_ui_div(term, 1, exact_p, MPFR_RNDD);
  mpfr_add(lo, lo, term, MPFR_RNDD);
  mpfr_ui_div(term, 1, exact_p, MPFR_RNDU);
  mpfr_add(hi, hi, term, MPFR_RNDU);
}

BoundedReal to_bounded(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec) {
  mpq_class qlo, qhi;
  mpfr_get_q(qlo.get_mpq_t(), lo);
  mpfr_get_q(qhi.get_mpq_t(), hi);
  return BoundedReal::between(qlo, qhi, prec);
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, const SieveOptions& options) : limit_(limit) {
  if (limit < 2) throw UsageError("prime table limit must be >= 2");
  if (limit > options.max_limit || limit > std::numeric_limits<std::uint32_t>::max())
    throw ResourceError("prime table limit " + std::to_string(limit) + " exceeds the memory budget");
  const std::size_t segment = std::max<std::size_t>(options.segment_bytes, 64);

  const auto base = small_primes(static_cast<std::uint32_t>(isqrt(limit)));
  primes_.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit) / std::log(static_cast<double>(limit))) + 16);
  primes_.push_back(2);

  // Segment k covers odd numbers low, low + 2, ..., one byte each.
  std::vector<unsigned char> sieve(segment);
  for (std::uint64_t low = 3; low <= limit; low += 2 * segment) {
    const std::uint64_t high = std::min<std::uint64_t>(limit, low + 2 * segment - 1);
    const std::size_t count = static_cast<std::size_t>((high - low) / 2 + 1);
    std::fill(sieve.begin(), sieve.begin() + static_cast<std::ptrdiff_t>(count), 1);
    for (std::size_t i = 1; i < base.size(); ++i) {
      const std::uint64_t p = base[i];
      std::uint64_t start = p * p;
      if (start > high) break;
      if (start < low) {
        start = (low + p - 1) / p * p;
        if (start % 2 == 0) start += p;
      }
      for (std::uint64_t j = start; j <= high; j += 2 * p) sieve[static_cast<std::size_t>((j - low) / 2)] = 0;
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (sieve[i]) primes_.push_back(static_cast<std::uint32_t>(low + 2 * i));
    }
  }
}

std::uint64_t PrimeTable::nth(std::size_t k) const {
  if (k == 0) throw UsageError("prime indices start at 1");
  if (k > primes_.size())
    throw ResourceError("prime index " + std::to_string(k) + " beyond table of " +
                        std::to_string(primes_.size()) + " primes");
  return primes_[k - 1];
}

void PrimeTable::require_in_range(std::uint64_t x) const {
  if (x > limit_)
    throw RangeError("argument " + std::to_string(x) + " beyond prime table limit " + std::to_string(limit_));
}

std::size_t PrimeTable::count_up_to(std::uint64_t x) const {
  require_in_range(x);
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

bool PrimeTable::is_prime(std::uint64_t x) const {
  require_in_range(x);
  return std::binary_search(primes_.begin(), primes_.end(), x);
}

std::optional<std::uint64_t> PrimeTable::prime_below(std::uint64_t x) const {
  if (x <= 2) return std::nullopt;
  return prime_at_most(x - 1);
}

std::optional<std::uint64_t> PrimeTable::prime_at_most(std::uint64_t x) const {
  require_in_range(x);
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  if (it == primes_.begin()) return std::nullopt;
  return *std::prev(it);
}

PrimeTable build_table(std::uint64_t limit, const SieveOptions& options) { return PrimeTable(limit, options); }

BoundedReal theta(std::uint64_t x, const PrimeTable& table, Precision prec) {
  if (x < 2) throw UsageError("theta: x must be >= 2");
  const std::size_t count = table.count_up_to(x);
  LogAccumulator acc(prec);
  for (std::size_t i = 0; i < count; ++i) acc.multiply(table.primes()[i]);
  return acc.result();
}

BoundedReal prime_recip_sum(std::uint64_t x, const PrimeTable& table, Precision prec) {
  if (x < 2) throw UsageError("prime_recip_sum: x must be >= 2");
  const std::size_t count = table.count_up_to(x);
  mpfr_t lo, hi, term, exact_p;
  mpfr_inits2(prec, lo, hi, term, static_cast<mpfr_ptr>(nullptr));
  mpfr_init2(exact_p, 64);
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (std::size_t i = 0; i < count; ++i) add_reciprocal(lo, hi, term, exact_p, table.primes()[i]);
  BoundedReal sum = to_bounded(lo, hi, prec);
  mpfr_clears(lo, hi, term, exact_p, static_cast<mpfr_ptr>(nullptr));
  return sum;
}

Factorization primorial_fact(std::size_t k, const PrimeTable& table) {
  if (k == 0) throw UsageError("primorial_fact: k must be >= 1");
  if (k > table.size())
    throw ResourceError("primorial_fact: k = " + std::to_string(k) + " exceeds the " +
                        std::to_string(table.size()) + " primes in the table");
  std::vector<PrimePower> entries;
  entries.reserve(k);
  for (std::size_t i = 0; i < k; ++i) entries.push_back({table.primes()[i], 1});
  return Factorization(std::move(entries));
}

ReciprocalBoundReport verify_reciprocal_sum_bound(std::uint64_t from, std::uint64_t to,
                                                  const PrimeTable& table, const RefinePolicy& policy,
                                                  unsigned workers) {
  if (from < 3) throw UsageError("reciprocal bound needs x >= 3 (log log x must be defined)");
  if (to < from) throw UsageError("reciprocal bound: empty range");
  const std::size_t end = table.count_up_to(to);
  const auto primes = table.primes();
  const Precision prec = policy.start;
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (end + kChunk - 1) / kChunk;

  // Prefix sums at chunk boundaries, sequential and outward rounded.
  std::vector<BoundedReal> prefix;
  prefix.reserve(chunks);
  {
    mpfr_t lo, hi, term, exact_p;
    mpfr_inits2(prec, lo, hi, term, static_cast<mpfr_ptr>(nullptr));
    mpfr_init2(exact_p, 64);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (std::size_t i = 0; i < end; ++i) {
      if (i % kChunk == 0) prefix.push_back(to_bounded(lo, hi, prec));
      add_reciprocal(lo, hi, term, exact_p, primes[i]);
    }
    mpfr_clears(lo, hi, term, exact_p, static_cast<mpfr_ptr>(nullptr));
  }

  struct ChunkResult {
    std::size_t checked = 0;
    std::vector<std::uint64_t> violations;
    std::vector<std::uint64_t> undecided;
    double min_margin = std::numeric_limits<double>::infinity();
    std::uint64_t min_prime = 0;
  };
  std::vector<ChunkResult> results(chunks);
  const BoundedReal gamma = const_gamma(prec);

  for_each_chunk(chunks, workers, [&](std::size_t c) {
    ChunkResult& out = results[c];
    BoundedReal sum = prefix[c];
    const std::size_t stop = std::min(end, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < stop; ++i) {
      const std::uint64_t p = primes[i];
      sum += BoundedReal::from_rational(mpq_class(1, static_cast<unsigned long>(p)), prec);
      if (p < from) continue;
      ++out.checked;
      Verdict v = compare_strict(sum, loglog_br(BoundedReal::from_u64(p, prec)) + gamma);
      if (v.undecided() && policy.cap > prec) {
        v = compare_strict(
            [&](Precision q) {
              return EnclosurePair{prime_recip_sum(p, table, q),
                                   loglog_br(BoundedReal::from_u64(p, q)) + const_gamma(q)};
            },
            RefinePolicy{prec * 2, policy.cap});
      }
      if (v.fails()) out.violations.push_back(p);
      if (v.undecided()) out.undecided.push_back(p);
      const double m = v.margin.lower();
      if (m < out.min_margin) {
        out.min_margin = m;
        out.min_prime = p;
      }
    }
  });

  ReciprocalBoundReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  bool first = true;
  for (const auto& r : results) {
    report.primes_checked += r.checked;
    report.violations.insert(report.violations.end(), r.violations.begin(), r.violations.end());
    report.undecided.insert(report.undecided.end(), r.undecided.begin(), r.undecided.end());
    if (r.checked > 0 && (first || r.min_margin < report.min_margin)) {
      report.min_margin = r.min_margin;
      report.min_margin_prime = r.min_prime;
      first = false;
    }
  }
  const std::size_t begin = table.count_up_to(from - 1);
  report.first_prime = begin < end ? primes[begin] : 0;
  report.last_prime = begin < end ? primes[end - 1] : 0;
  return report;
}

Verdict verify_mertens_gap(std::uint64_t x, const RefinePolicy& policy) {
  if (x < 3) throw UsageError("verify_mertens_gap: x must be >= 3");
  return compare_strict(
      [x](Precision prec) {
        const BoundedReal numerator =
            BoundedReal::exact(2, prec) * (BoundedReal::exact(1, prec) + log_br(BoundedReal::exact(4, prec)));
        const BoundedReal lhs = const_mertens(prec) + numerator / log_br(BoundedReal::from_u64(x, prec));
        return EnclosurePair{lhs, const_gamma(prec)};
      },
      policy);
}

}  // namespace robin
