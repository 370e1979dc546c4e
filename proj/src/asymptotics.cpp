#include "robin/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "robin/arith.hpp"
#include "robin/constants.hpp"
#include "robin/errors.hpp"
#include "robin/parallel.hpp"
#include "robin/prime_table.hpp"

namespace robin {

namespace {

BoundedReal loglog_checked(const Factorization& f, Precision prec, const char* who) {
  if (!f.exceeds(2)) throw DomainError(std::string(who) + ": n must be >= 3");
  return log_br(f.log_value(prec));
}

double midpoint(const BoundedReal& x) { return 0.5 * (x.lower() + x.upper()); }

}  // namespace

BoundedReal f1(const Factorization& f, Precision prec) {
  const BoundedReal ll = loglog_checked(f, prec, "f1");
  return sigma_over_n(f, prec) / ll;
}

BoundedReal f2(const Factorization& f, Precision prec) {
  const BoundedReal ll = loglog_checked(f, prec, "f2");
  return phi_ratio(f, prec) / ll;
}

std::string_view variant_name(Variant v) { return v == Variant::F1 ? "f1" : "f2"; }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::TPowerful: return "t_powerful";
    case Family::OddTPowerful: return "odd_t_powerful";
    case Family::Primorial: return "primorial";
    case Family::SquarefullSquares: return "squarefull_squares";
  }
  return "t_powerful";
}

Variant parse_variant(std::string_view token) {
  if (token == "f1") return Variant::F1;
  if (token == "f2") return Variant::F2;
  throw UsageError("unknown variant '" + std::string(token) + "' (f1|f2)");
}

Family parse_family(std::string_view token) {
  for (auto f : {Family::TPowerful, Family::OddTPowerful, Family::Primorial, Family::SquarefullSquares}) {
    if (family_name(f) == token) return f;
  }
  throw UsageError("unknown family '" + std::string(token) +
                   "' (t_powerful|odd_t_powerful|primorial|squarefull_squares)");
}

Factorization family_member(Family family, unsigned t, std::uint64_t x, const PrimeTable& table) {
  if (t < 2) throw UsageError("family_member: t must be >= 2");
  if (x > table.limit()) throw RangeError("family_member: x beyond the prime table");
  std::uint32_t exponent = t - 1;
  if (family == Family::Primorial) exponent = 1;
  if (family == Family::SquarefullSquares) exponent = 2;
  std::vector<PrimePower> entries;
  for (const std::uint32_t p : table.primes()) {
    if (p > x) break;
    if (family == Family::OddTPowerful && p == 2) continue;
    entries.push_back({p, exponent});
  }
  return Factorization(std::move(entries));
}

// Closed forms pi^s / d for small even s; the truncated Euler product with
// its tail bound otherwise.
static BoundedReal zeta_value(unsigned s, const PrimeTable& table, Precision prec) {
  static constexpr unsigned long kEvenDenominators[] = {6, 90, 945, 9450};
  if (s % 2 == 0 && s / 2 - 1 < std::size(kEvenDenominators)) {
    const BoundedReal pi = const_pi(prec);
    BoundedReal power = BoundedReal::exact(1, prec);
    for (unsigned i = 0; i < s; ++i) power *= pi;
    return power / BoundedReal::from_u64(kEvenDenominators[s / 2 - 1], prec);
  }
  const std::uint64_t cutoff = std::min<std::uint64_t>(table.limit(), 1'000'000);
  return zeta_int(s, cutoff, table, prec);
}

BoundedReal series_target(Variant variant, Family family, unsigned t, const PrimeTable& table, Precision prec) {
  const BoundedReal eg = const_exp_gamma(prec);
  if (variant == Variant::F2) {
    return family == Family::OddTPowerful ? eg / BoundedReal::exact(2, prec) : eg;
  }
  unsigned s = t;
  if (family == Family::Primorial) s = 2;
  if (family == Family::SquarefullSquares) s = 3;
  const BoundedReal zeta = zeta_value(s, table, prec);
  if (family != Family::OddTPowerful) return eg / zeta;
  // e^gamma / (2 zeta(t) (1 - 2^-t))
  mpz_class two_t;
  mpz_ui_pow_ui(two_t.get_mpz_t(), 2, s);
  mpq_class odd_part(two_t - 1, two_t);
  odd_part.canonicalize();
  return eg / (BoundedReal::exact(2, prec) * zeta * BoundedReal::from_rational(odd_part, prec));
}

std::vector<std::uint64_t> ratio_grid(std::uint64_t xmax, const PrimeTable& table) {
  if (xmax < 11) throw UsageError("ratio_grid: xmax must be >= 11");
  std::vector<std::uint64_t> grid;
  const std::uint64_t top = std::min(xmax, table.limit());
  for (std::uint64_t step = 10; step <= top; step *= 2) {
    const std::uint64_t below = *table.prime_at_most(step);
    std::uint64_t pick = below;
    for (std::uint64_t c = step + 1; c <= top && c - step < step - below; ++c) {
      if (table.is_prime(c)) {
        pick = c;
        break;
      }
    }
    grid.push_back(pick);
  }
  grid.push_back(*table.prime_at_most(top));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  // The odd family at x = 2 is n = 1, and f is undefined below n = 3.
  grid.erase(std::remove_if(grid.begin(), grid.end(), [](std::uint64_t x) { return x < 5; }), grid.end());
  return grid;
}

double RatioSeries::first_gap() const {
  return points.empty() ? 0.0 : std::abs(midpoint(points.front().value) - midpoint(target));
}

double RatioSeries::last_gap() const {
  return points.empty() ? 0.0 : std::abs(midpoint(points.back().value) - midpoint(target));
}

RatioSeries limsup_experiment(Variant variant, Family family, unsigned t, std::uint64_t xmax, const PrimeTable& table,
                              Precision prec, unsigned workers) {
  if (t < 2) throw UsageError("limsup_experiment: t must be >= 2");
  RatioSeries series;
  series.variant = variant;
  series.family = family;
  series.t = t;
  if (xmax > table.limit()) {
    series.warnings.push_back("grid truncated at sieve limit " + std::to_string(table.limit()) + " (requested " +
                              std::to_string(xmax) + ")");
  }
  series.target = series_target(variant, family, t, table, prec);
  const std::vector<std::uint64_t> grid = ratio_grid(xmax, table);
  series.points.resize(grid.size());
  for_each_chunk(grid.size(), workers, [&](std::size_t i) {
    const Factorization n = family_member(family, t, grid[i], table);
    RatioPoint& pt = series.points[i];
    pt.x = grid[i];
    pt.log_n = n.log_value(prec);
    pt.value = variant == Variant::F1 ? f1(n, prec) : f2(n, prec);
  });
  return series;
}

Verdict tfree_ratio_bound(const Factorization& f, unsigned t) {
  if (t < 2) throw UsageError("tfree_ratio_bound: t must be >= 2");
  mpq_class bound(1);
  for (const auto& pp : f.entries()) {
    if (pp.exponent >= t) throw DomainError("tfree_ratio_bound: " + f.to_string() + " is not " + std::to_string(t) + "-free");
    mpz_class pt1;
    mpz_ui_pow_ui(pt1.get_mpz_t(), static_cast<unsigned long>(pp.prime), t - 1);
    mpq_class factor(pt1 * static_cast<unsigned long>(pp.prime) - 1, pt1 * static_cast<unsigned long>(pp.prime - 1));
    factor.canonicalize();
    bound *= factor;
  }
  const mpq_class lhs = sigma_over_n_exact(f);
  Verdict v;
  v.precision = kDefaultPrecision;
  v.margin = BoundedReal::from_rational(bound - lhs);
  v.state = lhs <= bound ? Outcome::Holds : Outcome::Fails;
  return v;
}

}  // namespace robin
