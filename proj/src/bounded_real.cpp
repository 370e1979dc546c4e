#include "robin/bounded_real.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <vector>

#include "robin/errors.hpp"

namespace robin {

namespace {

// Raise x to at least `prec` bits; increasing precision is exact in MPFR.
void widen_to(mpfr_t x, Precision prec) {
  if (mpfr_get_prec(x) < prec) mpfr_prec_round(x, prec, MPFR_RNDN);
}

// Product with the interval convention 0 * inf = 0.
void mul_directed(mpfr_t out, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(a) || mpfr_zero_p(b)) {
    mpfr_set_zero(out, 1);
    return;
  }
  mpfr_mul(out, a, b, rnd);
}

std::string format_endpoint(mpfr_srcptr x, int digits, char rounding) {
  if (mpfr_inf_p(x)) return mpfr_sgn(x) < 0 ? "-inf" : "inf";
  const std::string fmt = std::string("%.*R") + rounding + "e";
  int size = mpfr_snprintf(nullptr, 0, fmt.c_str(), digits - 1, x);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), digits - 1, x);
  return std::string(buf.data());
}

}  // namespace

BoundedReal::BoundedReal(Precision prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

BoundedReal::BoundedReal(const BoundedReal& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

BoundedReal::BoundedReal(BoundedReal&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

BoundedReal& BoundedReal::operator=(const BoundedReal& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

BoundedReal& BoundedReal::operator=(BoundedReal&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

BoundedReal::~BoundedReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

BoundedReal BoundedReal::exact(long value, Precision prec) {
  BoundedReal r(prec);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::from_u64(std::uint64_t value, Precision prec) {
  BoundedReal r(prec);
  mpfr_set_uj(r.lo_, value, MPFR_RNDD);
  mpfr_set_uj(r.hi_, value, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::from_u128(u128 value, Precision prec) {
  return from_integer(to_mpz(value), prec);
}

BoundedReal BoundedReal::from_integer(const mpz_class& value, Precision prec) {
  BoundedReal r(prec);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::from_rational(const mpq_class& value, Precision prec) {
  BoundedReal r(prec);
  mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::from_decimal(std::string_view value, std::string_view error,
                                      Precision prec) {
  const mpq_class center = parse_decimal(value);
  const mpq_class radius = abs(parse_decimal(error));
  return between(center - radius, center + radius, prec);
}

BoundedReal BoundedReal::between(const mpq_class& lo, const mpq_class& hi, Precision prec) {
  if (lo > hi) throw DomainError("BoundedReal::between: lo > hi");
  BoundedReal r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::negative_infinity(Precision prec) {
  BoundedReal r(prec);
  mpfr_set_inf(r.lo_, -1);
  mpfr_set_inf(r.hi_, -1);
  return r;
}

BoundedReal BoundedReal::hull(const BoundedReal& a, const BoundedReal& b) {
  BoundedReal r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

double BoundedReal::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double BoundedReal::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double BoundedReal::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool BoundedReal::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool BoundedReal::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool BoundedReal::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool BoundedReal::contains(const BoundedReal& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool BoundedReal::contains_decimal(std::string_view literal) const {
  return contains(parse_decimal(literal));
}

bool BoundedReal::within(std::string_view lo, std::string_view hi) const {
  return mpfr_cmp_q(lo_, parse_decimal(lo).get_mpq_t()) >= 0 &&
         mpfr_cmp_q(hi_, parse_decimal(hi).get_mpq_t()) <= 0;
}

bool BoundedReal::matches_printed(std::string_view literal, Printed style) const {
  const auto dot = literal.find('.');
  const std::size_t decimals = dot == std::string_view::npos ? 0 : literal.size() - dot - 1;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, decimals);
  const mpq_class base = parse_decimal(literal);
  const mpq_class step(1, scale);
  const mpq_class half = step / 2;
  const mpq_class bottom = style == Printed::Truncated ? base : mpq_class(base - half);
  const mpq_class top = style == Printed::Rounded ? mpq_class(base + half) : mpq_class(base + step);
  return mpfr_cmp_q(lo_, bottom.get_mpq_t()) >= 0 && mpfr_cmp_q(hi_, top.get_mpq_t()) < 0;
}

BoundedReal BoundedReal::rounded(Precision prec) const {
  BoundedReal r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

std::string BoundedReal::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

std::string BoundedReal::lo_string(int digits) const { return format_endpoint(lo_, digits, 'D'); }
std::string BoundedReal::hi_string(int digits) const { return format_endpoint(hi_, digits, 'U'); }

BoundedReal& BoundedReal::operator+=(const BoundedReal& rhs) {
  widen_to(lo_, rhs.precision());
  widen_to(hi_, rhs.precision());
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

BoundedReal& BoundedReal::operator-=(const BoundedReal& rhs) {
  widen_to(lo_, rhs.precision());
  widen_to(hi_, rhs.precision());
  if (this == &rhs) {
    mpfr_t d;
    mpfr_init2(d, precision());
    mpfr_sub(d, hi_, lo_, MPFR_RNDU);
    mpfr_neg(lo_, d, MPFR_RNDD);
    mpfr_set(hi_, d, MPFR_RNDU);
    mpfr_clear(d);
    return *this;
  }
  mpfr_sub(lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  return *this;
}

BoundedReal& BoundedReal::operator*=(const BoundedReal& rhs) {
  const Precision prec = std::max(precision(), rhs.precision());
  BoundedReal out(prec);
  if (mpfr_sgn(lo_) >= 0 && mpfr_sgn(rhs.lo_) >= 0) {
    mul_directed(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mul_directed(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
  } else {
    std::array<mpfr_srcptr, 2> a{lo_, hi_};
    std::array<mpfr_srcptr, 2> b{rhs.lo_, rhs.hi_};
    mpfr_t cand;
    mpfr_init2(cand, prec);
    bool first = true;
    for (auto x : a) {
      for (auto y : b) {
        mul_directed(cand, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(cand, out.lo_)) mpfr_set(out.lo_, cand, MPFR_RNDD);
        mul_directed(cand, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(cand, out.hi_)) mpfr_set(out.hi_, cand, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(cand);
  }
  *this = std::move(out);
  return *this;
}

BoundedReal& BoundedReal::operator/=(const BoundedReal& rhs) {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0)
    throw DomainError("division by an enclosure containing zero");
  const Precision prec = std::max(precision(), rhs.precision());
  BoundedReal out(prec);
  std::array<mpfr_srcptr, 2> a{lo_, hi_};
  std::array<mpfr_srcptr, 2> b{rhs.lo_, rhs.hi_};
  mpfr_t cand;
  mpfr_init2(cand, prec);
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_div(cand, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(cand, out.lo_)) mpfr_set(out.lo_, cand, MPFR_RNDD);
      mpfr_div(cand, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(cand, out.hi_)) mpfr_set(out.hi_, cand, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(cand);
  *this = std::move(out);
  return *this;
}

BoundedReal BoundedReal::operator-() const {
  BoundedReal r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

BoundedReal log_br(const BoundedReal& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("log of an enclosure reaching zero or below");
  BoundedReal r(x.precision());
  mpfr_log(r.lo_, x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_, x.hi(), MPFR_RNDU);
  return r;
}

BoundedReal exp_br(const BoundedReal& x) {
  BoundedReal r(x.precision());
  mpfr_exp(r.lo_, x.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi(), MPFR_RNDU);
  return r;
}

BoundedReal loglog_br(const BoundedReal& x) {
  if (mpfr_cmp_ui(x.lo(), 1) <= 0) throw DomainError("loglog of an enclosure reaching 1 or below");
  return log_br(log_br(x));
}

LogAccumulator::LogAccumulator(Precision prec) : prec_(prec), pending_(1), sum_(prec) {}

void LogAccumulator::multiply(std::uint64_t factor, unsigned exponent) {
  if (factor == 0) throw DomainError("LogAccumulator: factor 0");
  if (factor == 1 || exponent == 0) return;
  mpz_class f(static_cast<unsigned long>(factor));
  if (exponent == 1) {
    pending_ *= f;
  } else {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), f.get_mpz_t(), exponent);
    pending_ *= power;
  }
  if (mpz_sizeinbase(pending_.get_mpz_t(), 2) > 4096) flush();
}

void LogAccumulator::flush() {
  if (pending_ == 1) return;
  sum_ += log_br(BoundedReal::from_integer(pending_, prec_));
  pending_ = 1;
}

BoundedReal LogAccumulator::result() {
  flush();
  return sum_;
}

mpq_class parse_decimal(std::string_view literal) {
  std::string text(literal);
  if (text.empty()) throw UsageError("empty decimal literal");
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    try {
      exponent = std::stol(text.substr(e + 1));
    } catch (const std::exception&) {
      throw UsageError("bad exponent in decimal literal: " + text);
    }
    text.resize(e);
  }
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  std::string digits;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) --exponent;
    } else {
      throw UsageError("bad decimal literal: " + std::string(literal));
    }
  }
  if (digits.empty()) throw UsageError("bad decimal literal: " + std::string(literal));
  mpq_class value(mpz_class(digits, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0)
    value /= scale;
  else
    value *= scale;
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

mpz_class to_mpz(u128 value) {
  const auto high = static_cast<std::uint64_t>(value >> 64);
  const auto low = static_cast<std::uint64_t>(value);
  mpz_class r(static_cast<unsigned long>(high));
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(low));
  return r;
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Undecided: return "undecided";
  }
  return "undecided";
}

Verdict compare_strict(const BoundedReal& lhs, const BoundedReal& rhs) {
  Verdict v;
  v.margin = rhs - lhs;
  v.precision = v.margin.precision();
  if (mpfr_sgn(v.margin.lo()) > 0)
    v.state = Outcome::Holds;
  else if (mpfr_sgn(v.margin.hi()) <= 0)
    v.state = Outcome::Fails;
  else
    v.state = Outcome::Undecided;
  return v;
}

Verdict compare_non_strict(const BoundedReal& lhs, const BoundedReal& rhs) {
  Verdict v;
  v.margin = rhs - lhs;
  v.precision = v.margin.precision();
  if (mpfr_sgn(v.margin.lo()) >= 0)
    v.state = Outcome::Holds;
  else if (mpfr_sgn(v.margin.hi()) < 0)
    v.state = Outcome::Fails;
  else
    v.state = Outcome::Undecided;
  return v;
}

namespace {

template <class Compare>
Verdict refine(const Evaluator& eval, const RefinePolicy& policy, Compare compare) {
  if (policy.start < MPFR_PREC_MIN || policy.cap < policy.start)
    throw UsageError("refine policy needs MPFR_PREC_MIN <= start <= cap");
  Precision prec = policy.start;
  for (;;) {
    auto [lhs, rhs] = eval(prec);
    Verdict v = compare(lhs, rhs);
    v.precision = prec;
    if (!v.undecided() || prec >= policy.cap) return v;
    prec = std::min(prec * 2, policy.cap);
  }
}

}  // namespace

Verdict compare_strict(const Evaluator& eval, const RefinePolicy& policy) {
  return refine(eval, policy, [](const BoundedReal& a, const BoundedReal& b) { return compare_strict(a, b); });
}

Verdict compare_non_strict(const Evaluator& eval, const RefinePolicy& policy) {
  return refine(eval, policy,
                [](const BoundedReal& a, const BoundedReal& b) { return compare_non_strict(a, b); });
}

}  // namespace robin
