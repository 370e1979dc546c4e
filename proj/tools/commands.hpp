#ifndef ROBIN_TOOLS_COMMANDS_HPP
#define ROBIN_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "report.hpp"
#include "robin/bounded_real.hpp"

namespace robin::cli {

// Exit-code contract.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

struct RunConfig {
  unsigned precision = kDefaultPrecision;
  std::uint64_t sieve_limit = 4'000'000;
  unsigned workers = 1;
  Format format = Format::JsonLines;

  Json to_json() const;
  void validate() const;
};

RunConfig default_config();

// key=value lines (precision, sieve_limit, workers, format); '#' starts a
// comment. Unknown keys and malformed values are usage errors.
void apply_config_file(const std::string& path, RunConfig& config);

// Parses argv, runs one command, writes the report to out and diagnostics to
// err, and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robin::cli

#endif  // ROBIN_TOOLS_COMMANDS_HPP
