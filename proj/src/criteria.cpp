#include "robin/criteria.hpp"

#include <string>

#include "robin/arith.hpp"
#include "robin/constants.hpp"
#include "robin/errors.hpp"

namespace robin {

std::string_view criterion_name(CriterionId id) {
  switch (id) {
    case CriterionId::Robin: return "robin";
    case CriterionId::Nicolas: return "nicolas";
    case CriterionId::Lagarias: return "lagarias";
    case CriterionId::RosserSchoenfeldUpper: return "rs-upper";
  }
  return "robin";
}

CriterionId parse_criterion(std::string_view token) {
  for (auto id : {CriterionId::Robin, CriterionId::Nicolas, CriterionId::Lagarias,
                  CriterionId::RosserSchoenfeldUpper}) {
    if (criterion_name(id) == token) return id;
  }
  throw UsageError("unknown criterion '" + std::string(token) + "' (robin|nicolas|lagarias|rs-upper)");
}

namespace {

Verdict undefined_at_one(const RefinePolicy& policy) {
  Verdict v;
  v.state = kOneSatisfiesRobin ? Outcome::Holds : Outcome::Fails;
  v.margin = BoundedReal::negative_infinity(policy.start);
  v.precision = policy.start;
  return v;
}

// e^gamma log log n, with log n taken from the factorization.
BoundedReal robin_bound(const Factorization& f, Precision prec) {
  return const_exp_gamma(prec) * log_br(f.log_value(prec));
}

}  // namespace

Verdict robin_check(const Factorization& f, const RefinePolicy& policy) {
  if (f.is_one()) return undefined_at_one(policy);
  return compare_strict(
      [&f](Precision prec) { return EnclosurePair{sigma_over_n(f, prec), robin_bound(f, prec)}; }, policy);
}

Verdict nicolas_check(const Factorization& f, const RefinePolicy& policy) {
  if (f.is_one()) return undefined_at_one(policy);
  return compare_strict(
      [&f](Precision prec) { return EnclosurePair{phi_ratio(f, prec), robin_bound(f, prec)}; }, policy);
}

Verdict lagarias_check(const Factorization& f, const BoundedReal& harmonic_n) {
  const BoundedReal lhs = BoundedReal::from_u128(sigma_exact(f), harmonic_n.precision());
  const BoundedReal rhs = harmonic_n + exp_br(harmonic_n) * log_br(harmonic_n);
  return compare_non_strict(lhs, rhs);
}

Verdict lagarias_check(std::uint64_t n, const RefinePolicy& policy) {
  if (n == 0) throw UsageError("lagarias_check: n must be >= 1");
  if (n > kHarmonicCap)
    throw ResourceError("lagarias_check: n above harmonic summation cap " + std::to_string(kHarmonicCap));
  // Factor n by trial division; n is bounded by the harmonic cap.
  std::vector<PrimePower> entries;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    entries.push_back({p, e});
  }
  if (m > 1) entries.push_back({m, 1});
  const Factorization f(std::move(entries));
  return compare_non_strict(
      [&](Precision prec) {
        const BoundedReal h = harmonic(n, prec);
        return EnclosurePair{BoundedReal::from_u128(sigma_exact(f), prec), h + exp_br(h) * log_br(h)};
      },
      policy);
}

Verdict rs_upper_check(const Factorization& f, const RefinePolicy& policy) {
  if (!f.exceeds(2)) throw UsageError("rs_upper_check: n must be >= 3");
  return compare_non_strict(
      [&f](Precision prec) {
        const BoundedReal ll = log_br(f.log_value(prec));
        const BoundedReal rhs = const_exp_gamma(prec) * ll + BoundedReal::exact(5, prec) / (BoundedReal::exact(2, prec) * ll);
        return EnclosurePair{phi_ratio(f, prec), rhs};
      },
      policy);
}

Verdict check(CriterionId id, const Factorization& f, const RefinePolicy& policy) {
  switch (id) {
    case CriterionId::Robin: return robin_check(f, policy);
    case CriterionId::Nicolas: return nicolas_check(f, policy);
    case CriterionId::RosserSchoenfeldUpper: return rs_upper_check(f, policy);
    case CriterionId::Lagarias: {
      const auto v = f.value();
      if (!v || *v > kHarmonicCap)
        throw ResourceError("lagarias: n = " + f.to_string() + " above harmonic summation cap");
      return lagarias_check(static_cast<std::uint64_t>(*v), policy);
    }
  }
  throw UsageError("unknown criterion");
}

}  // namespace robin
