#include "robin/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "robin/arith.hpp"
#include "robin/constants.hpp"
#include "robin/enumerate.hpp"
#include "robin/errors.hpp"
#include "robin/parallel.hpp"
#include "robin/prime_table.hpp"

namespace robin {

std::string ScanClass::name() const {
  switch (kind) {
    case ScanClassKind::All: return "all";
    case ScanClassKind::Odd: return "odd";
    case ScanClassKind::Squarefree: return "squarefree";
    case ScanClassKind::Squarefull: return "squarefull";
    case ScanClassKind::TFree: return "tfree:" + std::to_string(t);
    case ScanClassKind::HardyRamanujan: return "hr";
  }
  return "all";
}

bool ScanClass::admits(const Factorization& f) const {
  const NumberClass c = classify(f, kind == ScanClassKind::TFree ? t : 2);
  switch (kind) {
    case ScanClassKind::All: return true;
    case ScanClassKind::Odd: return c.odd;
    case ScanClassKind::Squarefree: return c.squarefree;
    case ScanClassKind::Squarefull: return c.squarefull;
    case ScanClassKind::TFree: return c.t_free;
    case ScanClassKind::HardyRamanujan: return c.hardy_ramanujan;
  }
  return false;
}

ScanClass parse_scan_class(std::string_view token) {
  if (token == "all") return {ScanClassKind::All};
  if (token == "odd") return {ScanClassKind::Odd};
  if (token == "squarefree") return {ScanClassKind::Squarefree};
  if (token == "squarefull") return {ScanClassKind::Squarefull};
  if (token == "hr") return {ScanClassKind::HardyRamanujan};
  if (token.starts_with("tfree:")) {
    const auto digits = token.substr(6);
    unsigned t = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t);
    if (ec == std::errc() && end == digits.data() + digits.size() && t >= 2 && t <= 64)
      return {ScanClassKind::TFree, t};
  }
  throw UsageError("unknown class '" + std::string(token) + "' (all|odd|squarefree|squarefull|tfree:t|hr)");
}

namespace {

// The largest n has at most 15 distinct prime factors.
constexpr std::size_t kMaxDistinct = 15;

struct ChunkResult {
  std::vector<std::uint64_t> violators;
  std::vector<std::uint64_t> undecided;
  std::uint64_t scanned = 0;
};

// Factors every n in [lo, hi] by sieving with the primes up to sqrt(hi).
class ChunkFactorizer {
 public:
  ChunkFactorizer(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table)
      : lo_(lo), len_(hi - lo + 1), rem_(len_), counts_(len_, 0), slots_(len_ * kMaxDistinct) {
    for (std::uint64_t i = 0; i < len_; ++i) rem_[i] = lo + i;
    for (const std::uint32_t p32 : table.primes()) {
      const std::uint64_t p = p32;
      if (p * p > hi) break;
      for (std::uint64_t m = (lo + p - 1) / p * p; m <= hi; m += p) {
        const std::uint64_t i = m - lo;
        std::uint32_t e = 0;
        while (rem_[i] % p == 0) {
          rem_[i] /= p;
          ++e;
        }
        slots_[i * kMaxDistinct + counts_[i]++] = {p, e};
      }
    }
    for (std::uint64_t i = 0; i < len_; ++i) {
      if (rem_[i] > 1) slots_[i * kMaxDistinct + counts_[i]++] = {rem_[i], 1};
    }
  }

  Factorization at(std::uint64_t n) const {
    const std::uint64_t i = n - lo_;
    const auto* first = slots_.data() + i * kMaxDistinct;
    return Factorization(std::vector<PrimePower>(first, first + counts_[i]));
  }

 private:
  std::uint64_t lo_;
  std::uint64_t len_;
  std::vector<std::uint64_t> rem_;
  std::vector<std::uint8_t> counts_;
  std::vector<PrimePower> slots_;
};

// Cheap certified pass for the strict criteria. L is a double not above
// e^gamma log log lo, written exactly as M 2^-k; for n >= lo in the block,
// num/den < L proves the criterion, and the comparison num 2^k < den M is
// exact in 128 bits.
class FastBound {
 public:
  // Blocks of this many integers share one bound.
  static constexpr std::uint64_t kBlock = 1024;

  void reset(std::uint64_t lo, Precision prec) {
    valid_ = false;
    if (lo < 16) return;
    const BoundedReal l = const_exp_gamma(prec) * loglog_br(BoundedReal::from_u64(lo, prec));
    const double d = mpfr_get_d(l.lo(), MPFR_RNDD);
    if (!(d > 0)) return;
    int e = 0;
    const double m = std::frexp(d, &e);
    mant_ = static_cast<u128>(std::ldexp(m, 53));
    shift_ = 53 - e;
    valid_ = shift_ >= 0 && shift_ < 64;
  }

  // True when num/den < L is proven.
  bool below(u128 num, u128 den) const {
    if (!valid_ || num >> 64 != 0 || den >> 64 != 0) return false;
    u128 rhs;
    if (__builtin_mul_overflow(den, mant_, &rhs)) return false;
    return (num << shift_) < rhs;
  }

 private:
  bool valid_ = false;
  u128 mant_ = 0;
  int shift_ = 0;
};

// (num, den) with num/den = sigma(n)/n or n/phi(n); nullopt if too wide.
std::optional<std::pair<u128, u128>> ratio_terms(CriterionId criterion, std::uint64_t n, const Factorization& f) {
  if (criterion == CriterionId::Robin) {
    u128 total = 1;
    for (const auto& pp : f.entries()) {
      u128 term = 1, sum = 1;
      for (std::uint32_t i = 0; i < pp.exponent; ++i) {
        term *= pp.prime;
        sum += term;
      }
      if (__builtin_mul_overflow(total, sum, &total)) return std::nullopt;
    }
    return std::pair{total, static_cast<u128>(n)};
  }
  u128 phi = 1;
  for (const auto& pp : f.entries()) {
    phi *= pp.prime - 1;
    for (std::uint32_t i = 1; i < pp.exponent; ++i) phi *= pp.prime;
  }
  return std::pair{static_cast<u128>(n), phi};
}

void record(const Verdict& v, std::uint64_t n, ChunkResult& out) {
  if (v.fails()) out.violators.push_back(n);
  else if (v.undecided()) out.undecided.push_back(n);
}

bool skipped(CriterionId criterion, std::uint64_t n) {
  return criterion == CriterionId::RosserSchoenfeldUpper && n < 3;
}

// Lagarias verdict with a carried h(n), refined from scratch if undecided.
Verdict lagarias_carried(std::uint64_t n, const Factorization& f, const HarmonicCursor& cursor,
                         const RefinePolicy& policy) {
  const Verdict v = lagarias_check(f, cursor.value());
  if (!v.undecided() || policy.cap <= policy.start) return v;
  return lagarias_check(n, RefinePolicy{policy.start * 2, policy.cap});
}

ChunkResult scan_enumerated(const std::vector<Enumerated>& members, CriterionId criterion,
                            const RefinePolicy& policy) {
  ChunkResult out;
  HarmonicCursor cursor(policy.start);
  for (const auto& m : members) {
    if (skipped(criterion, m.value)) continue;
    ++out.scanned;
    if (criterion == CriterionId::Lagarias) {
      while (cursor.position() < m.value) cursor.advance();
      record(lagarias_carried(m.value, m.factors, cursor, policy), m.value, out);
    } else {
      record(check(criterion, m.factors, policy), m.value, out);
    }
  }
  return out;
}

}  // namespace

ScanReport scan_violators(const ScanClass& cls, CriterionId criterion, std::uint64_t xmax,
                          const PrimeTable& table, const ScanOptions& options) {
  if (xmax < 1) throw UsageError("scan: --max must be >= 1");
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(xmax))) + 1;
  if (root > table.limit())
    throw RangeError("scan: sieve limit " + std::to_string(table.limit()) + " below sqrt(" +
                     std::to_string(xmax) + ")");
  if (criterion == CriterionId::Lagarias && xmax > kHarmonicCap)
    throw ResourceError("scan: lagarias range above harmonic summation cap " + std::to_string(kHarmonicCap));

  ScanReport report;
  report.class_name = cls.name();
  report.criterion = criterion;
  report.range_max = xmax;

  ChunkResult merged;
  if (cls.kind == ScanClassKind::Squarefull || cls.kind == ScanClassKind::HardyRamanujan) {
    std::vector<Enumerated> members;
    if (cls.kind == ScanClassKind::HardyRamanujan) {
      members = hr_enumerate_factored(xmax);
    } else {
      for (const std::uint64_t n : squarefull_enumerate(xmax)) members.push_back({n, factorize(n, table)});
    }
    merged = scan_enumerated(members, criterion, options.policy);
  } else {
    const std::uint64_t size = std::max<std::uint64_t>(options.chunk_size, 1);
    const std::size_t chunks = static_cast<std::size_t>((xmax + size - 1) / size);
    // h(lo - 1) at every chunk start, computed once in order.
    std::vector<BoundedReal> harmonic_starts;
    if (criterion == CriterionId::Lagarias) {
      HarmonicCursor cursor(options.policy.start);
      harmonic_starts.reserve(chunks);
      for (std::size_t c = 0; c < chunks; ++c) {
        const std::uint64_t before = c * size;
        while (cursor.position() < before) cursor.advance();
        harmonic_starts.push_back(cursor.value());
      }
    }
    std::vector<ChunkResult> results(chunks);
    for_each_chunk(chunks, options.workers, [&](std::size_t c) {
      const std::uint64_t lo = c * size + 1;
      const std::uint64_t hi = std::min(xmax, lo + size - 1);
      const ChunkFactorizer factors(lo, hi, table);
      ChunkResult& out = results[c];
      std::optional<HarmonicCursor> cursor;
      if (criterion == CriterionId::Lagarias) {
        if (lo == 1) cursor.emplace(options.policy.start);
        else cursor.emplace(lo - 1, harmonic_starts[c]);
      }
      const bool strict = criterion == CriterionId::Robin || criterion == CriterionId::Nicolas;
      FastBound fast;
      for (std::uint64_t n = lo; n <= hi; ++n) {
        if (cursor) cursor->advance();
        if (strict && (n == lo || n % FastBound::kBlock == 0)) fast.reset(n, options.policy.start);
        if (cls.kind == ScanClassKind::Odd && n % 2 == 0) continue;
        if (skipped(criterion, n)) continue;
        const Factorization f = factors.at(n);
        if (!cls.admits(f)) continue;
        ++out.scanned;
        if (cursor) {
          record(lagarias_carried(n, f, *cursor, options.policy), n, out);
          continue;
        }
        if (strict) {
          const auto terms = ratio_terms(criterion, n, f);
          if (terms && fast.below(terms->first, terms->second)) continue;
        }
        record(check(criterion, f, options.policy), n, out);
      }
    });
    for (auto& r : results) {
      merged.violators.insert(merged.violators.end(), r.violators.begin(), r.violators.end());
      merged.undecided.insert(merged.undecided.end(), r.undecided.begin(), r.undecided.end());
      merged.scanned += r.scanned;
    }
  }

  report.violators = std::move(merged.violators);
  report.undecided = std::move(merged.undecided);
  report.scanned_count = merged.scanned;
  if (criterion == CriterionId::RosserSchoenfeldUpper)
    report.notes.push_back("n < 3 skipped: log log n <= 0 leaves the bound undefined");
  if ((criterion == CriterionId::Robin || criterion == CriterionId::Nicolas) &&
      std::binary_search(report.violators.begin(), report.violators.end(), 1))
    report.notes.push_back("n = 1 counted as a violator: log log 1 is undefined");
  if (!report.undecided.empty())
    report.notes.push_back(std::to_string(report.undecided.size()) + " undecided at the precision cap");
  return report;
}

std::optional<std::vector<std::uint64_t>> expect_fixture(std::string_view name) {
  if (name == "setA") return std::vector<std::uint64_t>(std::begin(kSetA), std::end(kSetA));
  if (name == "odd-robin") return std::vector<std::uint64_t>{1, 3, 5, 9};
  if (name == "odd-nicolas") return std::vector<std::uint64_t>{1, 3, 5, 9, 15};
  if (name == "squarefree-robin") return std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 30};
  if (name == "squarefull-robin") return std::vector<std::uint64_t>{1, 4, 8, 9, 16, 36};
  if (name == "squarefull-nicolas")
    return std::vector<std::uint64_t>{1, 4, 8, 9, 16, 36, 72, 108, 144, 216, 900, 1800, 2700, 3600, 44100, 88200};
  return std::nullopt;
}

std::vector<std::string> expect_fixture_names() {
  return {"setA", "odd-robin", "odd-nicolas", "squarefree-robin", "squarefull-robin", "squarefull-nicolas"};
}

bool RqReport::matches_expected() const {
  return undecided.empty() && eleven_all_hold &&
         std::equal(failures.begin(), failures.end(), std::begin(kExpectedRqFailures), std::end(kExpectedRqFailures));
}

RqReport verify_lemma2(std::uint64_t qmax, const PrimeTable& table, const RefinePolicy& policy) {
  if (qmax < 11) throw UsageError("verify_lemma2: qmax must be >= 11");
  if (qmax > table.limit()) throw RangeError("verify_lemma2: qmax beyond the prime table");
  RqReport report;
  report.qmax = qmax;
  report.eleven_all_hold = true;
  std::vector<Factorization> rs;
  for (const std::uint64_t r : kSetA) rs.push_back(factorize(r, table));
  for (const std::uint32_t q : table.primes()) {
    if (q < 7) continue;
    if (q > qmax) break;
    const Factorization fq({{q, 1}});
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const Verdict v = robin_check(rs[i] * fq, policy);
      ++report.checked;
      if (v.fails()) report.failures.push_back({q, kSetA[i]});
      if (v.undecided()) report.undecided.push_back({q, kSetA[i]});
      if (q == 11 && !v.holds()) report.eleven_all_hold = false;
    }
  }
  return report;
}

bool SetSReport::matches_expected() const {
  return undecided.empty() &&
         std::equal(robin_failures.begin(), robin_failures.end(), std::begin(kExpectedSetSRobin),
                    std::end(kExpectedSetSRobin)) &&
         std::equal(nicolas_failures.begin(), nicolas_failures.end(), std::begin(kExpectedSetSNicolas),
                    std::end(kExpectedSetSNicolas));
}

SetSReport verify_set_s(std::uint64_t xmax, const PrimeTable& table, const RefinePolicy& policy) {
  if (xmax < 31) throw UsageError("verify_set_s: xmax must be >= 31");
  if (xmax > table.limit()) throw RangeError("verify_set_s: xmax beyond the prime table");
  std::vector<Enumerated> members;
  for (std::uint64_t p3 = 1, a = 0; p3 <= xmax; p3 *= 3, ++a) {
    for (std::uint64_t m = p3, b = 0; m <= xmax; m *= 5, ++b) {
      std::vector<PrimePower> base;
      if (a > 0) base.push_back({3, static_cast<std::uint32_t>(a)});
      if (b > 0) base.push_back({5, static_cast<std::uint32_t>(b)});
      members.push_back({m, Factorization(base)});
      for (const std::uint32_t q : table.primes()) {
        if (q < 7) continue;
        if (q > xmax / m) break;
        std::uint64_t n = m;
        for (std::uint32_t c = 1; n <= xmax / q; ++c) {
          n *= q;
          auto entries = base;
          entries.push_back({q, c});
          members.push_back({n, Factorization(std::move(entries))});
        }
      }
    }
  }
  std::sort(members.begin(), members.end(), [](const Enumerated& x, const Enumerated& y) { return x.value < y.value; });

  SetSReport report;
  report.xmax = xmax;
  report.members = members.size();
  for (const auto& m : members) {
    const Verdict r = robin_check(m.factors, policy);
    const Verdict n = nicolas_check(m.factors, policy);
    if (r.fails()) report.robin_failures.push_back(m.value);
    if (n.fails()) report.nicolas_failures.push_back(m.value);
    if (r.undecided() || n.undecided()) report.undecided.push_back(m.value);
  }
  return report;
}

PrimorialReport primorial_nicolas_scan(std::size_t kmax, const PrimeTable& table, const RefinePolicy& policy) {
  if (kmax < 1) throw UsageError("primorial_nicolas_scan: kmax must be >= 1");
  if (kmax > table.size()) throw RangeError("primorial_nicolas_scan: p_kmax beyond the prime table");
  const Precision prec = policy.start;
  const BoundedReal eg = const_exp_gamma(prec);
  BoundedReal ratio = BoundedReal::exact(1, prec);
  BoundedReal theta_k = BoundedReal::exact(0, prec);

  PrimorialReport report;
  report.kmax = kmax;
  report.rows.reserve(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const std::uint64_t p = table.nth(k);
    mpq_class factor(mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(p - 1)));
    ratio *= BoundedReal::from_rational(factor, prec);
    theta_k += log_br(BoundedReal::from_u64(p, prec));

    PrimorialRow row;
    row.k = k;
    row.prime = p;
    const BoundedReal ll = log_br(theta_k);
    row.exceeds = compare_strict(eg * ll, ratio).state;
    if (row.exceeds == Outcome::Undecided && policy.cap > prec) {
      const Factorization f = primorial_fact(k, table);
      row.exceeds = compare_strict(
                        [&f](Precision q) {
                          return EnclosurePair{const_exp_gamma(q) * log_br(f.log_value(q)), phi_ratio(f, q)};
                        },
                        RefinePolicy{prec * 2, policy.cap})
                        .state;
    }
    if (k >= 2) {
      const BoundedReal rhs = eg * ll + BoundedReal::exact(5, prec) / (BoundedReal::exact(2, prec) * ll);
      row.rs_upper = compare_non_strict(ratio, rhs).state;
      if (row.rs_upper == Outcome::Undecided && policy.cap > prec)
        row.rs_upper = rs_upper_check(primorial_fact(k, table), RefinePolicy{prec * 2, policy.cap}).state;
      if (row.rs_upper == Outcome::Fails) report.rs_upper_failures.push_back(k);
    }
    if (row.exceeds == Outcome::Fails) report.not_exceeding.push_back(k);
    if (row.exceeds == Outcome::Undecided || (k >= 2 && row.rs_upper == Outcome::Undecided))
      report.undecided.push_back(k);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace robin
