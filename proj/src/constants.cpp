#include "robin/constants.hpp"

#include <map>
#include <string>

#include "robin/errors.hpp"
#include "robin/prime_table.hpp"

namespace robin {

namespace {

// Meissel-Mertens constant truncated to 160 decimals. The error bound below
// covers truncation plus the uncertainty of the source evaluation.
constexpr std::string_view kMertensLiteral =
    "0.261497212847642783755426838608695859051566648261199206192064213924924510897368209714142631434"
    "2466510516177288764860219977833903242700444245434874019723864066619";
constexpr std::string_view kMertensError = "1e-158";

void require_precision(Precision prec, Precision cap, const char* what) {
  if (prec < MPFR_PREC_MIN) throw UsageError(std::string(what) + ": precision too small");
  if (prec > cap)
    throw PrecisionCapError(std::string(what) + ": requested " + std::to_string(prec) +
                            " bits, cap is " + std::to_string(cap));
}

using ConstantFn = int (*)(mpfr_ptr, mpfr_rnd_t);

BoundedReal bracket(Precision prec, ConstantFn fn) {
  mpfr_t down, up;
  mpfr_init2(down, prec);
  mpfr_init2(up, prec);
  fn(down, MPFR_RNDD);
  fn(up, MPFR_RNDU);
  mpq_class lo, hi;
  mpfr_get_q(lo.get_mpq_t(), down);
  mpfr_get_q(hi.get_mpq_t(), up);
  mpfr_clear(down);
  mpfr_clear(up);
  return BoundedReal::between(lo, hi, prec);
}

}  // namespace

BoundedReal const_gamma(Precision prec) {
  require_precision(prec, kConstantPrecisionCap, "const_gamma");
  // mpfr_const_euler is correctly rounded, so the two directed roundings
  // bracket gamma with width one ulp.
  return bracket(prec, mpfr_const_euler);
}

BoundedReal const_exp_gamma(Precision prec) {
  require_precision(prec, kConstantPrecisionCap, "const_exp_gamma");
  thread_local std::map<Precision, BoundedReal> cache;
  if (auto it = cache.find(prec); it != cache.end()) return it->second;
  // Two guard bits keep the width within 2^(1-prec) after outward rounding.
  BoundedReal value = exp_br(const_gamma(prec + 40)).rounded(prec + 2);
  cache.emplace(prec, value);
  return value;
}

BoundedReal const_mertens(Precision prec) {
  require_precision(prec, kMertensPrecisionCap, "const_mertens");
  return BoundedReal::from_decimal(kMertensLiteral, kMertensError, prec);
}

BoundedReal const_pi(Precision prec) {
  require_precision(prec, kConstantPrecisionCap, "const_pi");
  return bracket(prec, mpfr_const_pi);
}

BoundedReal tail_log_bound(unsigned t, std::uint64_t x, Precision prec) {
  if (t < 2) throw UsageError("tail_log_bound: t must be >= 2");
  if (x < 3) throw UsageError("tail_log_bound: x must be >= 3");
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), x, t - 1);
  mpq_class bound(mpz_class(t), power * (t - 1));
  bound.canonicalize();
  return BoundedReal::from_rational(bound, prec);
}

BoundedReal zeta_int(unsigned t, std::uint64_t cutoff, const PrimeTable& table, Precision prec) {
  if (t < 2) throw UsageError("zeta_int: t must be >= 2");
  if (cutoff < 3) throw UsageError("zeta_int: cutoff must be >= 3");
  if (cutoff > table.limit()) throw RangeError("zeta_int: cutoff beyond prime table");
  BoundedReal product = BoundedReal::exact(1, prec);
  mpz_class power;
  for (std::uint32_t p : table.primes()) {
    if (p > cutoff) break;
    mpz_ui_pow_ui(power.get_mpz_t(), p, t);
    mpq_class factor(power, power - 1);
    factor.canonicalize();
    product *= BoundedReal::from_rational(factor, prec);
  }
  const BoundedReal tail_hi = exp_br(tail_log_bound(t, cutoff, prec));
  mpq_class top;
  mpfr_get_q(top.get_mpq_t(), tail_hi.hi());
  return product * BoundedReal::between(mpq_class(1), top, prec);
}

}  // namespace robin
