#include "robin/arith.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "robin/errors.hpp"
#include "robin/prime_table.hpp"

namespace robin {

namespace {

mpz_class power_of(std::uint64_t p, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

// (p^(e+1) - 1) / (p^e (p - 1)), the local factor of sigma(n)/n.
mpq_class sigma_factor(const PrimePower& pp) {
  const mpz_class pe = power_of(pp.prime, pp.exponent);
  mpq_class f(pe * static_cast<unsigned long>(pp.prime) - 1, pe * static_cast<unsigned long>(pp.prime - 1));
  f.canonicalize();
  return f;
}

mpq_class phi_factor(std::uint64_t p) {
  mpq_class f(mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(p - 1)));
  f.canonicalize();
  return f;
}

}  // namespace

u128 sigma_exact(const Factorization& f) {
  u128 total = 1;
  for (const auto& pp : f.entries()) {
    // 1 + p + ... + p^e, accumulated with overflow checks.
    u128 term = 1;
    u128 sum = 1;
    for (std::uint32_t i = 0; i < pp.exponent; ++i) {
      if (__builtin_mul_overflow(term, static_cast<u128>(pp.prime), &term) ||
          __builtin_add_overflow(sum, term, &sum))
        throw WidthError("sigma(" + f.to_string() + ") exceeds 128 bits; use sigma_over_n");
    }
    if (__builtin_mul_overflow(total, sum, &total))
      throw WidthError("sigma(" + f.to_string() + ") exceeds 128 bits; use sigma_over_n");
  }
  return total;
}

mpq_class sigma_over_n_exact(const Factorization& f) {
  mpq_class r(1);
  for (const auto& pp : f.entries()) r *= sigma_factor(pp);
  return r;
}

BoundedReal sigma_over_n(const Factorization& f, Precision prec) {
  BoundedReal r = BoundedReal::exact(1, prec);
  for (const auto& pp : f.entries()) r *= BoundedReal::from_rational(sigma_factor(pp), prec);
  return r;
}

mpq_class phi_ratio_exact(const Factorization& f) {
  mpq_class r(1);
  for (const auto& pp : f.entries()) r *= phi_factor(pp.prime);
  return r;
}

BoundedReal phi_ratio(const Factorization& f, Precision prec) {
  BoundedReal r = BoundedReal::exact(1, prec);
  for (const auto& pp : f.entries()) r *= BoundedReal::from_rational(phi_factor(pp.prime), prec);
  return r;
}

Factorization kappa(const Factorization& f) {
  std::vector<PrimePower> entries;
  entries.reserve(f.distinct_primes());
  for (const auto& pp : f.entries()) entries.push_back({pp.prime, 1});
  return Factorization(std::move(entries));
}

NumberClass classify(const Factorization& f, unsigned t) {
  if (t < 2) throw UsageError("classify: t must be >= 2");
  NumberClass c;
  c.t = t;
  const auto entries = f.entries();
  std::size_t large_primes = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& pp = entries[i];
    if (pp.prime == 2) c.odd = false;
    if (pp.exponent >= 2) c.squarefree = false;
    if (pp.exponent < 2) c.squarefull = false;
    if (pp.exponent >= t) c.t_free = false;
    if (pp.prime == 2) c.in_set_s = false;
    if (pp.prime >= 7) ++large_primes;
    if (i == 0) {
      if (pp.prime != 2) c.hardy_ramanujan = false;
    } else {
      if (pp.exponent > entries[i - 1].exponent || next_prime_u64(entries[i - 1].prime) != pp.prime)
        c.hardy_ramanujan = false;
    }
  }
  if (large_primes > 1) c.in_set_s = false;
  return c;
}

ExponentPattern exponent_pattern(const Factorization& f) {
  std::vector<std::uint32_t> exps;
  exps.reserve(f.distinct_primes());
  for (const auto& pp : f.entries()) exps.push_back(pp.exponent);
  std::sort(exps.begin(), exps.end(), std::greater<>());
  return ExponentPattern(std::move(exps));
}

Factorization minimal_number(const ExponentPattern& pattern, const PrimeTable& table) {
  if (pattern.size() > table.size())
    throw ResourceError("minimal_number: pattern of length " + std::to_string(pattern.size()) +
                        " needs more primes than the table holds");
  std::vector<PrimePower> entries;
  entries.reserve(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) entries.push_back({table.primes()[i], pattern.exponents()[i]});
  return Factorization(std::move(entries));
}

BoundedReal harmonic(std::uint64_t n, Precision prec, std::uint64_t cap) {
  if (n == 0) throw UsageError("harmonic: n must be >= 1");
  if (n > cap)
    throw ResourceError("harmonic: n = " + std::to_string(n) + " above summation cap " + std::to_string(cap));
  HarmonicCursor cursor(prec);
  while (cursor.position() < n) cursor.advance();
  return cursor.value();
}

HarmonicCursor::HarmonicCursor(Precision prec) : prec_(prec) {
  mpfr_inits2(prec, lo_, hi_, term_, static_cast<mpfr_ptr>(nullptr));
  mpfr_init2(exact_, 64);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

HarmonicCursor::HarmonicCursor(std::uint64_t n, const BoundedReal& h_n) : HarmonicCursor(h_n.precision()) {
  n_ = n;
  mpfr_set(lo_, h_n.lo(), MPFR_RNDD);
  mpfr_set(hi_, h_n.hi(), MPFR_RNDU);
}

HarmonicCursor::~HarmonicCursor() { mpfr_clears(lo_, hi_, term_, exact_, static_cast<mpfr_ptr>(nullptr)); }

BoundedReal HarmonicCursor::value() const {
  mpq_class lo, hi;
  mpfr_get_q(lo.get_mpq_t(), lo_);
  mpfr_get_q(hi.get_mpq_t(), hi_);
  return BoundedReal::between(lo, hi, prec_);
}

void HarmonicCursor::advance() {
  ++n_;
  mpfr_set_uj(exact_, n_, MPFR_RNDN);
  mpfr_ui_div(term_, 1, exact_, MPFR_RNDD);
  mpfr_add(lo_, lo_, term_, MPFR_RNDD);
  mpfr_ui_div(term_, 1, exact_, MPFR_RNDU);
  mpfr_add(hi_, hi_, term_, MPFR_RNDU);
}

}  // namespace robin
