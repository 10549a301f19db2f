#pragma once

#include <string>

#include <json.hpp>

namespace orbitkit::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "orbitkit";
inline constexpr const char* kToolVersion = "0.1.0";

/// Machine-readable outcome of one subcommand run.
struct RunReport {
  int schema_version = kSchemaVersion;
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string subcommand;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string verdict = "not-applicable";  // "pass", "fail" or "not-applicable"
  double timing_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(Json& j, const RunReport& report);
void from_json(const Json& j, RunReport& report);

enum class OutputFormat { Json, Csv, Table };
OutputFormat parse_format(const std::string& name);

/// Pretty JSON with sorted keys.
std::string render_json(const RunReport& report);
/// A "rows" array in the results becomes one CSV line per row; any other
/// results are flattened into key,value lines.
std::string render_csv(const RunReport& report);
/// Aligned plain-text rendering of the same content as the CSV.
std::string render_table(const RunReport& report);
std::string render(const RunReport& report, OutputFormat format);

}  // namespace orbitkit::cli
