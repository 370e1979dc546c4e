#ifndef ROBIN_BOUNDED_REAL_HPP
#define ROBIN_BOUNDED_REAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace robin {

using Precision = mpfr_prec_t;
using u128 = unsigned __int128;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kRefineCap = 512;

/// Certified enclosure [lo, hi] of a real number.
/**
 * Both endpoints are MPFR floats of the same working precision. Every
 * operation rounds lo towards -inf and hi towards +inf, so the true image of
 * any value inside the operands is inside the result. Infinite endpoints are
 * permitted (log of 0 is -inf); NaN never appears in a constructed value.
 */
class BoundedReal {
 public:
  explicit BoundedReal(Precision prec = kDefaultPrecision);
  BoundedReal(const BoundedReal& other);
  BoundedReal(BoundedReal&& other) noexcept;
  BoundedReal& operator=(const BoundedReal& other);
  BoundedReal& operator=(BoundedReal&& other) noexcept;
  ~BoundedReal();

  static BoundedReal exact(long value, Precision prec = kDefaultPrecision);
  static BoundedReal from_u64(std::uint64_t value, Precision prec = kDefaultPrecision);
  static BoundedReal from_u128(u128 value, Precision prec = kDefaultPrecision);
  static BoundedReal from_integer(const mpz_class& value, Precision prec = kDefaultPrecision);
  static BoundedReal from_rational(const mpq_class& value, Precision prec = kDefaultPrecision);
  // value ± error, both given as decimal literals.
  static BoundedReal from_decimal(std::string_view value, std::string_view error,
                                  Precision prec = kDefaultPrecision);
  // Enclosure of [lo, hi] with lo <= hi given as exact rationals.
  static BoundedReal between(const mpq_class& lo, const mpq_class& hi,
                             Precision prec = kDefaultPrecision);
  static BoundedReal negative_infinity(Precision prec = kDefaultPrecision);
  static BoundedReal hull(const BoundedReal& a, const BoundedReal& b);

  Precision precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  // Endpoints converted to double, still rounded outward.
  double lower() const;
  double upper() const;
  // Upper bound on hi - lo.
  double width() const;

  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains(const mpq_class& value) const;
  bool contains(const BoundedReal& inner) const;
  bool contains_decimal(std::string_view literal) const;
  // True when the enclosure sits inside [lo, hi] (decimal literals).
  bool within(std::string_view lo, std::string_view hi) const;
  // True when every point of the enclosure agrees with a printed literal v
  // of k decimals: [v, v + 10^-k) if truncated, [v - 10^-k/2, v + 10^-k/2)
  // if rounded, and the union of the two for Either.
  enum class Printed { Truncated, Rounded, Either };
  bool matches_printed(std::string_view literal, Printed style = Printed::Truncated) const;

  // Same enclosure rounded outward to a different working precision.
  BoundedReal rounded(Precision prec) const;

  std::string to_string(int digits = 20) const;
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;

  BoundedReal& operator+=(const BoundedReal& rhs);
  BoundedReal& operator-=(const BoundedReal& rhs);
  BoundedReal& operator*=(const BoundedReal& rhs);
  BoundedReal& operator/=(const BoundedReal& rhs);

  friend BoundedReal operator+(BoundedReal lhs, const BoundedReal& rhs) { return lhs += rhs; }
  friend BoundedReal operator-(BoundedReal lhs, const BoundedReal& rhs) { return lhs -= rhs; }
  friend BoundedReal operator*(BoundedReal lhs, const BoundedReal& rhs) { return lhs *= rhs; }
  friend BoundedReal operator/(BoundedReal lhs, const BoundedReal& rhs) { return lhs /= rhs; }
  BoundedReal operator-() const;

  friend BoundedReal log_br(const BoundedReal& x);
  friend BoundedReal exp_br(const BoundedReal& x);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

// Monotone images with outward rounding. log_br needs lo > 0, loglog_br
// needs lo > 1; violations throw DomainError.
BoundedReal log_br(const BoundedReal& x);
BoundedReal exp_br(const BoundedReal& x);
BoundedReal loglog_br(const BoundedReal& x);

// Enclosure of log(prod p_i^e_i) for a stream of integer factors. Factors are
// multiplied exactly into a pending big integer and a log is taken only when
// it grows past a few thousand bits, so long products need few log calls.
class LogAccumulator {
 public:
  explicit LogAccumulator(Precision prec = kDefaultPrecision);
  void multiply(std::uint64_t factor, unsigned exponent = 1);
  BoundedReal result();

 private:
  void flush();

  Precision prec_;
  mpz_class pending_;
  BoundedReal sum_;
};

// Exact decimal literal ("-12.5e-3" style) as a rational.
mpq_class parse_decimal(std::string_view literal);
mpz_class to_mpz(u128 value);

enum class Outcome { Holds, Fails, Undecided };

std::string_view outcome_name(Outcome outcome);

/// Three-valued result of a certified comparison.
/**
 * margin encloses rhs - lhs. For strict lhs < rhs: Holds means margin.lo > 0,
 * Fails means margin.hi <= 0. For non-strict lhs <= rhs: Holds means
 * margin.lo >= 0, Fails means margin.hi < 0. Anything else is Undecided.
 */
struct Verdict {
  Outcome state = Outcome::Undecided;
  BoundedReal margin;
  Precision precision = kDefaultPrecision;

  bool holds() const { return state == Outcome::Holds; }
  bool fails() const { return state == Outcome::Fails; }
  bool undecided() const { return state == Outcome::Undecided; }
};

// Working precision starts at `start` and doubles up to `cap` while the
// comparison stays undecided.
struct RefinePolicy {
  Precision start = kDefaultPrecision;
  Precision cap = kRefineCap;
};

using EnclosurePair = std::pair<BoundedReal, BoundedReal>;
using Evaluator = std::function<EnclosurePair(Precision)>;

Verdict compare_strict(const BoundedReal& lhs, const BoundedReal& rhs);
Verdict compare_non_strict(const BoundedReal& lhs, const BoundedReal& rhs);
Verdict compare_strict(const Evaluator& eval, const RefinePolicy& policy);
Verdict compare_non_strict(const Evaluator& eval, const RefinePolicy& policy);

}  // namespace robin

#endif  // ROBIN_BOUNDED_REAL_HPP
