#ifndef ROBIN_ERRORS_HPP
#define ROBIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace robin {

// Every failure raised by the library derives from robin::Error so callers
// (the CLI in particular) can map categories onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments from the caller: n = 0, limit < 2, unknown tokens.
struct UsageError : Error {
  using Error::Error;
};

// A request exceeds a configured budget (sieve memory, summation cap, table size).
struct ResourceError : Error {
  using Error::Error;
};

// Argument outside the range covered by a prebuilt structure.
struct RangeError : Error {
  using Error::Error;
};

// Mathematical domain violation, e.g. log of a non-positive enclosure.
struct DomainError : Error {
  using Error::Error;
};

// Requested precision beyond what a constant's source can certify.
struct PrecisionCapError : Error {
  using Error::Error;
};

// Cofactor could not be split with the available table; never a wrong answer.
struct IncompleteFactorization : Error {
  using Error::Error;
};

// Exact integer result does not fit the 128-bit width.
struct WidthError : Error {
  using Error::Error;
};

// Broken internal contract (non-terminating iteration, duplicate generation).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace robin

#endif  // ROBIN_ERRORS_HPP
