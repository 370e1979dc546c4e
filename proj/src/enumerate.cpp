#include "robin/enumerate.hpp"

#include <algorithm>
#include <string>

#include "robin/arith.hpp"
#include "robin/criteria.hpp"
#include "robin/errors.hpp"
#include "robin/prime_table.hpp"

namespace robin {

namespace {

// Primes needed for any Hardy-Ramanujan integer below 2^64: the primorial of
// the 16th prime already overflows.
constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

template <class Emit>
void hr_descend(std::uint64_t xmax, std::size_t index, std::uint32_t max_exp, std::uint64_t product,
                std::vector<PrimePower>& stack, Emit& emit) {
  emit(product, stack);
  if (index >= std::size(kSmallPrimes)) return;
  const std::uint64_t p = kSmallPrimes[index];
  std::uint64_t next = product;
  for (std::uint32_t e = 1; e <= max_exp; ++e) {
    if (__builtin_mul_overflow(next, p, &next) || next > xmax) break;
    stack.push_back({p, e});
    hr_descend(xmax, index + 1, e, next, stack, emit);
    stack.pop_back();
  }
}

bool is_squarefree_u64(std::uint64_t b) {
  for (std::uint64_t d = 2; d * d <= b; ++d) {
    if (b % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> hr_enumerate(std::uint64_t xmax) {
  if (xmax < 1) throw UsageError("hr_enumerate: xmax must be >= 1");
  std::vector<std::uint64_t> out;
  std::vector<PrimePower> stack;
  auto emit = [&out](std::uint64_t v, const std::vector<PrimePower>&) { out.push_back(v); };
  hr_descend(xmax, 0, UINT32_MAX, 1, stack, emit);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Enumerated> hr_enumerate_factored(std::uint64_t xmax) {
  if (xmax < 1) throw UsageError("hr_enumerate: xmax must be >= 1");
  std::vector<Enumerated> out;
  std::vector<PrimePower> stack;
  auto emit = [&out](std::uint64_t v, const std::vector<PrimePower>& s) {
    out.push_back({v, Factorization(s)});
  };
  hr_descend(xmax, 0, UINT32_MAX, 1, stack, emit);
  std::sort(out.begin(), out.end(), [](const Enumerated& a, const Enumerated& b) { return a.value < b.value; });
  return out;
}

CensusReport hr_5free_census(const RefinePolicy& policy) {
  struct Candidate {
    mpz_class value;
    Factorization factors;
  };
  std::vector<Candidate> all;
  std::vector<std::uint32_t> exps;
  // Every non-increasing exponent vector with entries in [1, 4] and length
  // 1..21, built by extending one position at a time.
  auto extend = [&](auto&& self) -> void {
    if (!exps.empty()) {
      std::vector<PrimePower> entries;
      mpz_class value = 1;
      for (std::size_t i = 0; i < exps.size(); ++i) {
        entries.push_back({kCensusPrimes[i], exps[i]});
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(kCensusPrimes[i]), exps[i]);
        value *= pe;
      }
      all.push_back({std::move(value), Factorization(std::move(entries))});
    }
    if (exps.size() == kCensusPrimeCount) return;
    const std::uint32_t cap = exps.empty() ? kCensusMaxExponent : exps.back();
    for (std::uint32_t e = 1; e <= cap; ++e) {
      exps.push_back(e);
      self(self);
      exps.pop_back();
    }
  };
  extend(extend);
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  CensusReport report;
  report.total = all.size();
  report.entries.reserve(all.size());
  for (auto& c : all) {
    CensusEntry e;
    e.above_5040 = c.value > 5040;
    e.robin = robin_check(c.factors, policy);
    if (e.above_5040) {
      ++report.above_5040;
      if (e.robin.holds()) ++report.holds_above_5040;
      if (e.robin.fails()) report.fails_above_5040.push_back(c.factors);
    }
    if (e.robin.undecided()) report.undecided.push_back(c.factors);
    e.factors = std::move(c.factors);
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::vector<std::uint64_t> squarefull_enumerate(std::uint64_t xmax) {
  if (xmax < 1) throw UsageError("squarefull_enumerate: xmax must be >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 1;; ++b) {
    const u128 b3 = static_cast<u128>(b) * b * b;
    if (b3 > xmax) break;
    if (!is_squarefree_u64(b)) continue;
    for (std::uint64_t a = 1;; ++a) {
      const u128 n = static_cast<u128>(a) * a * b3;
      if (n > xmax) break;
      out.push_back(static_cast<std::uint64_t>(n));
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InternalError("squarefull_enumerate: a^2 b^3 representation produced a duplicate");
  return out;
}

PatternMaximum pattern_max_ratio(const ExponentPattern& pattern, std::size_t prime_budget,
                                 const PrimeTable& table, Precision prec) {
  const std::size_t k = pattern.size();
  if (k == 0) throw UsageError("pattern_max_ratio: empty pattern");
  if (prime_budget < k) throw UsageError("pattern_max_ratio: prime budget smaller than pattern length");
  if (prime_budget > table.size()) throw ResourceError("pattern_max_ratio: prime budget exceeds table");
  // budget! / (budget - k)! injective assignments.
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    count *= prime_budget - i;
    if (count > kPatternAssignmentBudget)
      throw ResourceError("pattern_max_ratio: more than " + std::to_string(kPatternAssignmentBudget) +
                          " assignments");
  }

  PatternMaximum best;
  bool have = false;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(prime_budget, false);
  auto assign = [&](auto&& self) -> void {
    if (chosen.size() == k) {
      std::vector<PrimePower> entries;
      for (std::size_t i = 0; i < k; ++i) entries.push_back({table.primes()[chosen[i]], pattern.exponents()[i]});
      std::sort(entries.begin(), entries.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
      Factorization f(std::move(entries));
      mpq_class r = sigma_over_n_exact(f);
      ++best.assignments;
      if (!have || r > best.exact_ratio) {
        best.exact_ratio = r;
        best.maximizer = std::move(f);
        best.unique = true;
        have = true;
      } else if (r == best.exact_ratio) {
        best.unique = false;
      }
      return;
    }
    for (std::size_t j = 0; j < prime_budget; ++j) {
      if (used[j]) continue;
      used[j] = true;
      chosen.push_back(j);
      self(self);
      chosen.pop_back();
      used[j] = false;
    }
  };
  assign(assign);
  best.ratio = BoundedReal::from_rational(best.exact_ratio, prec);
  return best;
}

DensityResult density_even_nonsquarefree(std::uint64_t xmax) {
  if (xmax < 1) throw UsageError("density_even_nonsquarefree: xmax must be >= 1");
  if (xmax > 4'000'000'000ull) throw ResourceError("density_even_nonsquarefree: xmax above 4e9");
  // Mark even n divisible by some square d^2, d >= 2; only even n are stored.
  std::vector<bool> hit(xmax / 2 + 1, false);
  for (std::uint64_t d = 2; d * d <= xmax; ++d) {
    const std::uint64_t sq = d * d;
    // Even multiples of sq: step sq if sq is even, 2 sq otherwise.
    const std::uint64_t step = sq % 2 == 0 ? sq : 2 * sq;
    for (std::uint64_t m = step; m <= xmax; m += step) hit[m / 2] = true;
  }
  DensityResult r;
  r.xmax = xmax;
  r.count = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), true));
  mpq_class q(mpz_class(std::to_string(r.count)), mpz_class(std::to_string(xmax)));
  q.canonicalize();
  r.density = BoundedReal::from_rational(q);
  return r;
}

}  // namespace robin
