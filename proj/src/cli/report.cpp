#include "orbitkit/cli/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace orbitkit::cli {

namespace {

using Table = std::vector<std::vector<std::string>>;

std::string cell_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

void flatten(const Json& value, const std::string& prefix, Table& out) {
  if (value.is_object() && !value.empty()) {
    for (const auto& [key, item] : value.items()) {
      flatten(item, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out.push_back({prefix, cell_text(value)});
}

bool has_rows(const RunReport& report) {
  return report.results.contains("rows") && report.results["rows"].is_array();
}

// Header followed by data lines.
Table tabulate(const RunReport& report) {
  Table table;
  if (has_rows(report)) {
    const Json& rows = report.results["rows"];
    std::set<std::string> keys;
    for (const auto& row : rows) {
      for (const auto& [key, item] : row.items()) keys.insert(key);
    }
    table.emplace_back(keys.begin(), keys.end());
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (const auto& key : keys) line.push_back(row.contains(key) ? cell_text(row[key]) : "");
      table.push_back(std::move(line));
    }
    return table;
  }
  table.push_back({"key", "value"});
  flatten(report.inputs, "inputs", table);
  flatten(report.results, "results", table);
  table.push_back({"verdict", report.verdict});
  return table;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void to_json(Json& j, const RunReport& report) {
  j = Json{{"schema_version", report.schema_version},
           {"tool", report.tool},
           {"version", report.version},
           {"subcommand", report.subcommand},
           {"inputs", report.inputs},
           {"results", report.results},
           {"verdict", report.verdict},
           {"timing_ms", report.timing_ms}};
}

void from_json(const Json& j, RunReport& report) {
  j.at("schema_version").get_to(report.schema_version);
  j.at("tool").get_to(report.tool);
  j.at("version").get_to(report.version);
  j.at("subcommand").get_to(report.subcommand);
  report.inputs = j.at("inputs");
  report.results = j.at("results");
  j.at("verdict").get_to(report.verdict);
  j.at("timing_ms").get_to(report.timing_ms);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown format \"" + name + "\"");
}

std::string render_json(const RunReport& report) { return Json(report).dump(2) + "\n"; }

std::string render_csv(const RunReport& report) {
  std::ostringstream os;
  for (const auto& line : tabulate(report)) {
    for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_escape(line[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_table(const RunReport& report) {
  const Table table = tabulate(report);
  std::vector<std::size_t> widths;
  for (const auto& line : table) {
    widths.resize(std::max(widths.size(), line.size()), 0);
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  }
  std::ostringstream os;
  os << report.tool << " " << report.subcommand << ": " << report.verdict << "\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t i = 0; i < table[r].size(); ++i) {
      os << (i ? "  " : "") << table[r][i];
      if (i + 1 < table[r].size()) os << std::string(widths[i] - table[r][i].size(), ' ');
    }
    os << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : widths) total += w + 2;
      os << std::string(total > 2 ? total - 2 : total, '-') << "\n";
    }
  }
  return os.str();
}

std::string render(const RunReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return render_json(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Table: return render_table(report);
  }
  return render_json(report);
}

}  // namespace orbitkit::cli
