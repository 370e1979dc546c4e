#ifndef ROBIN_CONSTANTS_HPP
#define ROBIN_CONSTANTS_HPP

#include <cstdint>
#include <string_view>

#include "robin/bounded_real.hpp"

namespace robin {

class PrimeTable;

// Largest precision accepted by the MPFR-backed constants.
inline constexpr Precision kConstantPrecisionCap = 4096;
// The Mertens constant comes from a 160-digit literal; beyond this the
// literal's error bound dominates the requested width.
inline constexpr Precision kMertensPrecisionCap = 512;

// 60-digit published values, used to cross-check the computed enclosures.
inline constexpr std::string_view kGammaLiteral =
    "0.577215664901532860606512090082402431042159335939923598805767";
inline constexpr std::string_view kExpGammaLiteral =
    "1.78107241799019798523650410310717954916964521430343020535767";
inline constexpr std::string_view kLiteralError = "1e-59";

// Euler's constant, width <= 2^(1 - prec).
BoundedReal const_gamma(Precision prec = kDefaultPrecision);
BoundedReal const_exp_gamma(Precision prec = kDefaultPrecision);
// Meissel-Mertens constant B = 0.2614972128...
BoundedReal const_mertens(Precision prec = kDefaultPrecision);
BoundedReal const_pi(Precision prec = kDefaultPrecision);

// zeta(t) for integer t >= 2 as the Euler product over p <= cutoff times the
// tail factor R_t(cutoff), enclosed by [1, exp(t cutoff^(1-t) / (t-1))].
BoundedReal zeta_int(unsigned t, std::uint64_t cutoff, const PrimeTable& table,
                     Precision prec = kDefaultPrecision);

// The tail exponent t x^(1-t) / (t-1), exactly rational before rounding.
BoundedReal tail_log_bound(unsigned t, std::uint64_t x, Precision prec = kDefaultPrecision);

}  // namespace robin

#endif  // ROBIN_CONSTANTS_HPP
