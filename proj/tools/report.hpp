#ifndef ROBIN_TOOLS_REPORT_HPP
#define ROBIN_TOOLS_REPORT_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "robin/bounded_real.hpp"

namespace robin::cli {

using Json = nlohmann::ordered_json;

enum class Format { JsonLines, Csv, Human };

std::string_view format_name(Format f);
Format parse_format(std::string_view token);

// One homogeneous record set; every row has one cell per column.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add(std::vector<Json> row);
};

/// A finished command run.
/**
 * The header (tool, version, command line, config) and the footer (wall
 * time) frame a body of tables plus a summary object; the body is a pure
 * function of command and config, so reruns reproduce it byte for byte.
 */
struct Report {
  std::string command;
  std::string command_line;
  Json config = Json::object();
  std::vector<Table> tables;
  Json summary = Json::object();
  int exit_code = 0;
  double wall_seconds = 0.0;

  Table& table(std::string name, std::vector<std::string> columns);
};

void write_report(const Report& report, Format format, std::ostream& out);

// Enclosure endpoints as outward-rounded decimal strings.
inline constexpr int kPrintDigits = 20;
Json enclosure(const BoundedReal& x, int digits = kPrintDigits);
std::string lo_text(const BoundedReal& x, int digits = kPrintDigits);
std::string hi_text(const BoundedReal& x, int digits = kPrintDigits);

}  // namespace robin::cli

#endif  // ROBIN_TOOLS_REPORT_HPP
