#include "robin/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "robin/arith.hpp"
#include "robin/constants.hpp"
#include "robin/criteria.hpp"
#include "robin/errors.hpp"
#include "robin/prime_table.hpp"
#include "robin/scan.hpp"

namespace robin {

namespace {

// Primes beyond this add under t x^(1-t)/(t-1) to log zeta(t); 10^5 keeps
// the enclosure of log zeta(2) within 2e-5 and is cheap to recompute.
constexpr std::uint64_t kZetaCutoff = 100'000;

BoundedReal rational(long num, long den, Precision prec) {
  mpq_class q(num, den);
  q.canonicalize();
  return BoundedReal::from_rational(q, prec);
}

BoundedReal log_zeta(unsigned t, const PrimeTable& table, Precision prec) {
  return log_br(zeta_int(t, std::min<std::uint64_t>(kZetaCutoff, table.limit()), table, prec));
}

BoundedReal z0_expression_with(unsigned t, std::uint64_t z, const BoundedReal& log_zeta_t, Precision prec) {
  const BoundedReal lz = log_br(BoundedReal::from_u64(z, prec));
  const BoundedReal one = BoundedReal::exact(1, prec);
  return tail_log_bound(t, z, prec) + log_br(one + one / (lz * lz)) - log_zeta_t;
}

BoundedReal exp_scaled(const BoundedReal& p, Precision prec) { return exp_br(p / const_exp_gamma(prec)); }

bool lower_exceeds(const BoundedReal& x, std::uint64_t n) {
  return mpfr_cmp_ui(x.lo(), static_cast<unsigned long>(n)) > 0;
}

}  // namespace

BoundedReal p_t_product(unsigned t, std::uint64_t x, const PrimeTable& table, Precision prec) {
  if (t < 2) throw UsageError("p_t_product: t must be >= 2");
  if (x < 2) throw UsageError("p_t_product: x must be >= 2");
  if (x > table.limit())
    throw ResourceError("p_t_product: x = " + std::to_string(x) + " beyond sieve limit " + std::to_string(table.limit()));
  BoundedReal r = BoundedReal::exact(1, prec);
  for (const std::uint32_t p : table.primes()) {
    if (p > x) break;
    mpz_class pt1;
    mpz_ui_pow_ui(pt1.get_mpz_t(), p, t - 1);
    mpq_class factor(pt1 * p - 1, pt1 * (p - 1));
    factor.canonicalize();
    r *= BoundedReal::from_rational(factor, prec);
  }
  return r;
}

BoundedReal z0_expression(unsigned t, std::uint64_t z, const PrimeTable& table, Precision prec) {
  if (t < 2) throw UsageError("z0_expression: t must be >= 2");
  if (z < 3) throw UsageError("z0_expression: z must be >= 3");
  return z0_expression_with(t, z, log_zeta(t, table, prec), prec);
}

Verdict z0_negative_at(unsigned t, std::uint64_t z, const PrimeTable& table, const RefinePolicy& policy) {
  return compare_strict(
      [&](Precision prec) { return EnclosurePair{z0_expression(t, z, table, prec), BoundedReal(prec)}; }, policy);
}

Z0Result find_z0(unsigned t, const PrimeTable& table, const RefinePolicy& policy) {
  if (t < 2) throw UsageError("find_z0: t must be >= 2");
  std::map<Precision, BoundedReal> zeta_cache;
  auto expr = [&](std::uint64_t z) {
    return [&, z](Precision prec) {
      auto it = zeta_cache.find(prec);
      if (it == zeta_cache.end()) it = zeta_cache.emplace(prec, log_zeta(t, table, prec)).first;
      return EnclosurePair{z0_expression_with(t, z, it->second, prec), BoundedReal(prec)};
    };
  };
  constexpr std::uint64_t kSearchGuard = 1'000'000;
  Z0Result result;
  std::optional<Verdict> previous;
  for (std::uint64_t z = 3; z <= kSearchGuard; ++z) {
    const Verdict v = compare_strict(Evaluator(expr(z)), policy);
    if (v.undecided())
      throw PrecisionCapError("find_z0: sign of the expression at z = " + std::to_string(z) +
                              " undecided at " + std::to_string(policy.cap) + " bits");
    if (v.holds()) {
      result.z0 = z;
      result.at_z0 = v;
      if (previous) {
        // Non-negativity at z0 - 1, stated as 0 <= expression.
        result.before_z0 = compare_non_strict(
            Evaluator([&](Precision prec) {
              auto pair = expr(z - 1)(prec);
              return EnclosurePair{std::move(pair.second), std::move(pair.first)};
            }),
            policy);
      }
      return result;
    }
    previous = v;
  }
  throw InternalError("find_z0: no certified z0 below " + std::to_string(kSearchGuard));
}

CascadeTrace cascade_down(unsigned t, std::uint64_t start_z, const PrimeTable& table, Precision prec) {
  if (t < 2) throw UsageError("cascade_down: t must be >= 2");
  if (start_z < 3) throw UsageError("cascade_down: start z must be >= 3");
  if (start_z > table.limit()) throw ResourceError("cascade_down: start z beyond sieve limit");
  CascadeTrace trace;
  trace.t = t;
  trace.z0 = start_z;
  std::uint64_t z = start_z;
  std::uint64_t anchor = *table.prime_below(z);
  for (;;) {
    if (trace.steps.size() >= kCascadeStepGuard)
      throw InternalError("cascade_down: no fixed point after " + std::to_string(kCascadeStepGuard) + " steps");
    CascadeStep step;
    step.z_bound = z;
    step.anchor = anchor;
    step.p_value = p_t_product(t, anchor, table, prec);
    step.next_bound = exp_scaled(step.p_value, prec);
    const std::uint64_t next_z = mpfr_get_uj(step.next_bound.hi(), MPFR_RNDD) + 1;
    trace.steps.push_back(step);
    const auto next_anchor = next_z > 2 ? table.prime_below(next_z) : std::nullopt;
    if (!next_anchor || *next_anchor >= anchor || next_z >= z) {
      trace.terminal_z = anchor;
      trace.terminal_certified = lower_exceeds(trace.steps.back().next_bound, anchor);
      return trace;
    }
    z = next_z;
    anchor = *next_anchor;
  }
}

bool SmallCaseReport::passed() const {
  if (!log_bound_certified || !failures.empty() || !undecided.empty()) return false;
  if (extended_violators) {
    for (const std::uint64_t n : *extended_violators) {
      if (std::find(std::begin(kSetA), std::end(kSetA), n) == std::end(kSetA)) return false;
    }
  }
  return true;
}

SmallCaseReport verify_thm5_smallcase(const PrimeTable& table, const RefinePolicy& policy, bool extended,
                                      unsigned workers) {
  const Precision prec = policy.start;
  SmallCaseReport report;
  report.constant = p_t_product(5, 11, table, prec);
  report.log_n_bound = exp_scaled(report.constant, prec);
  report.log_bound_certified =
      compare_strict(
          [&](Precision q) { return EnclosurePair{exp_scaled(p_t_product(5, 11, table, q), q), rational(1355, 100, q)}; },
          policy)
          .holds();

  // Candidates with all five primes present; the margin keeps anything whose
  // log might reach the bound despite enclosure slack.
  const BoundedReal limit = rational(1356, 100, prec);
  constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11};
  for (std::uint32_t code = 0; code < 4 * 4 * 4 * 4 * 4; ++code) {
    std::vector<PrimePower> entries;
    std::uint32_t c = code;
    for (const std::uint64_t p : kPrimes) {
      entries.push_back({p, c % 4 + 1});
      c /= 4;
    }
    const Factorization f(std::move(entries));
    ++report.candidates;
    if (mpfr_cmp(f.log_value(prec).lo(), limit.hi()) > 0) continue;
    ++report.in_range;
    if (!f.exceeds(5040)) continue;
    ++report.above_5040;
    const Verdict v = robin_check(f, policy);
    if (v.holds()) ++report.holds;
    else if (v.fails()) report.failures.push_back(f);
    else report.undecided.push_back(f);
  }

  if (extended) {
    const auto xmax = static_cast<std::uint64_t>(std::ceil(std::exp(kSmallCaseLogBound))) + 1;
    ScanOptions options;
    options.policy = policy;
    options.workers = workers;
    const ScanReport scan = scan_violators(ScanClass{ScanClassKind::TFree, 5}, CriterionId::Robin, xmax, table, options);
    report.extended_violators = scan.violators;
    for (const std::uint64_t n : scan.undecided) report.undecided.push_back(factorize(n, table));
  }
  return report;
}

Prod73Report verify_prod73_vs_prod20000(const PrimeTable& table, const RefinePolicy& policy) {
  if (table.limit() < 20000) throw RangeError("verify_prod73_vs_prod20000: table must reach 20000");
  const Precision prec = policy.start;
  Prod73Report report;
  report.four_theta_73 = BoundedReal::exact(4, prec) * theta(73, table, prec);
  report.theta_20000 = theta(20000, table, prec);
  report.verdict = compare_strict(
      [&](Precision q) {
        return EnclosurePair{BoundedReal::exact(4, q) * theta(73, table, q), theta(20000, table, q)};
      },
      policy);
  report.theta_lower = compare_strict(
      [&](Precision q) { return EnclosurePair{BoundedReal::exact(16800, q), theta(20000, table, q)}; }, policy);
  return report;
}

bool Lemma7Report::passed() const {
  if (rows.size() != 25 || !chain_failures.empty()) return false;
  for (const auto& row : rows) {
    if (row.m <= 4 ? !row.inequality.holds() : !row.inequality.fails()) return false;
  }
  return true;
}

Lemma7Report verify_lemma7(const PrimeTable& table, const RefinePolicy& policy) {
  if (table.size() < 100) throw RangeError("verify_lemma7: table must hold 100 primes");
  const Precision prec = policy.start;
  Lemma7Report report;
  auto sides = [&](std::size_t m, Precision q) {
    const Factorization f = primorial_fact(m, table);
    const BoundedReal lhs = phi_ratio(f, q);
    const BoundedReal rhs = const_exp_gamma(q) * log_br(BoundedReal::exact(2, q) * f.log_value(q));
    return EnclosurePair{lhs, rhs};
  };
  for (std::size_t m = 1; m <= 25; ++m) {
    Lemma7Row row;
    row.m = m;
    auto pair = sides(m, prec);
    row.lhs = pair.first;
    row.rhs = pair.second;
    // lhs >= rhs, i.e. rhs <= lhs.
    row.inequality = compare_non_strict(
        [&](Precision q) {
          auto s = sides(m, q);
          return EnclosurePair{std::move(s.second), std::move(s.first)};
        },
        policy);
    report.rows.push_back(std::move(row));
  }
  for (std::size_t m = 26; m <= 100; ++m) {
    const std::uint64_t p = table.nth(m);
    const Verdict chain = compare_strict(
        [&](Precision q) {
          const BoundedReal lp = log_br(BoundedReal::from_u64(p, q));
          const BoundedReal th = theta(p, table, q);
          return EnclosurePair{lp + BoundedReal::exact(1, q) / lp, log_br(BoundedReal::exact(2, q) * th)};
        },
        policy);
    const Verdict density = compare_strict(
        [&](Precision q) {
          return EnclosurePair{rational(84, 100, q) * BoundedReal::from_u64(p, q), theta(p, table, q)};
        },
        policy);
    if (!chain.holds() || !density.holds()) report.chain_failures.push_back(m);
  }
  return report;
}

Thm8Report verify_thm8_bound(const PrimeTable& table, const RefinePolicy& policy, unsigned workers) {
  const Precision prec = policy.start;
  Thm8Report report;
  auto bound_at = [](Precision q) { return exp_br(exp_scaled(rational(35, 8, q), q)); };
  report.bound = bound_at(prec);
  report.bound_certified =
      compare_strict([&](Precision q) { return EnclosurePair{bound_at(q), BoundedReal::exact(116145, q)}; }, policy)
          .holds();
  ScanOptions options;
  options.policy = policy;
  options.workers = workers;
  const ScanClass squarefull{ScanClassKind::Squarefull};
  const ScanReport nic = scan_violators(squarefull, CriterionId::Nicolas, kThm8Range, table, options);
  const ScanReport rob = scan_violators(squarefull, CriterionId::Robin, kThm8Range, table, options);
  report.nicolas_violators = nic.violators;
  report.robin_violators = rob.violators;
  report.nicolas_matches = nic.violators == *expect_fixture("squarefull-nicolas");
  report.robin_matches = rob.violators == *expect_fixture("squarefull-robin");
  report.undecided = nic.undecided.size() + rob.undecided.size();
  return report;
}

}  // namespace robin
