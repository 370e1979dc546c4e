#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "robin/errors.hpp"

#ifndef ROBIN_VERSION
#define ROBIN_VERSION "0.0.0"
#endif

namespace robin::cli {

std::string_view format_name(Format f) {
  switch (f) {
    case Format::JsonLines: return "json-lines";
    case Format::Csv: return "csv";
    case Format::Human: return "human";
  }
  return "json-lines";
}

Format parse_format(std::string_view token) {
  if (token == "json-lines") return Format::JsonLines;
  if (token == "csv") return Format::Csv;
  if (token == "human") return Format::Human;
  throw UsageError("unknown format '" + std::string(token) + "' (json-lines|csv|human)");
}

void Table::add(std::vector<Json> row) {
  if (row.size() != columns.size()) throw InternalError("table " + name + ": row width mismatch");
  rows.push_back(std::move(row));
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(name), std::move(columns), {}});
  return tables.back();
}

std::string lo_text(const BoundedReal& x, int digits) { return x.lo_string(digits); }
std::string hi_text(const BoundedReal& x, int digits) { return x.hi_string(digits); }

Json enclosure(const BoundedReal& x, int digits) {
  Json j = Json::object();
  j["lo"] = lo_text(x, digits);
  j["hi"] = hi_text(x, digits);
  return j;
}

namespace {

std::string wall_text(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  return buf;
}

// Cell text for csv/human: strings bare, everything else as JSON.
std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_json_lines(const Report& r, std::ostream& out) {
  Json header = Json::object();
  header["record"] = "header";
  header["tool"] = "robin_tool";
  header["version"] = ROBIN_VERSION;
  header["command"] = r.command;
  header["command_line"] = r.command_line;
  header["config"] = r.config;
  out << header.dump() << '\n';
  for (const auto& t : r.tables) {
    for (const auto& row : t.rows) {
      Json j = Json::object();
      j["record"] = t.name;
      for (std::size_t i = 0; i < t.columns.size(); ++i) j[t.columns[i]] = row[i];
      out << j.dump() << '\n';
    }
  }
  Json summary = Json::object();
  summary["record"] = "summary";
  for (const auto& [k, v] : r.summary.items()) summary[k] = v;
  summary["exit_code"] = r.exit_code;
  out << summary.dump() << '\n';
  Json footer = Json::object();
  footer["record"] = "footer";
  footer["wall_time_s"] = wall_text(r.wall_seconds);
  out << footer.dump() << '\n';
}

void write_csv(const Report& r, std::ostream& out) {
  out << "# robin_tool " << ROBIN_VERSION << '\n';
  out << "# command_line: " << r.command_line << '\n';
  out << "# config: " << r.config.dump() << '\n';
  for (const auto& t : r.tables) {
    out << "# table: " << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell(row[i]));
      out << '\n';
    }
  }
  out << "# table: summary\nkey,value\n";
  for (const auto& [k, v] : r.summary.items()) out << k << ',' << csv_escape(cell(v)) << '\n';
  out << "exit_code," << r.exit_code << '\n';
  out << "# wall_time_s: " << wall_text(r.wall_seconds) << '\n';
}

void write_human(const Report& r, std::ostream& out) {
  out << "robin_tool " << ROBIN_VERSION << "  " << r.command_line << '\n';
  out << "config " << r.config.dump() << "\n\n";
  for (const auto& t : r.tables) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell(row[i]).size());
    out << t.name << " (" << t.rows.size() << ")\n";
    auto line = [&](auto&& text_of) {
      out << ' ';
      for (std::size_t i = 0; i < width.size(); ++i) {
        const std::string s = text_of(i);
        out << ' ' << s << std::string(width[i] - s.size(), ' ');
      }
      out << '\n';
    };
    line([&](std::size_t i) { return t.columns[i]; });
    for (const auto& row : t.rows) line([&](std::size_t i) { return cell(row[i]); });
    out << '\n';
  }
  std::size_t key_width = 9;
  for (const auto& [k, v] : r.summary.items()) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : r.summary.items()) out << k << std::string(key_width - k.size(), ' ') << "  " << cell(v) << '\n';
  out << "exit_code" << std::string(key_width - 9, ' ') << "  " << r.exit_code << '\n';
  out << "wall time " << wall_text(r.wall_seconds) << " s\n";
}

}  // namespace

void write_report(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::JsonLines: write_json_lines(report, out); break;
    case Format::Csv: write_csv(report, out); break;
    case Format::Human: write_human(report, out); break;
  }
}

}  // namespace robin::cli
