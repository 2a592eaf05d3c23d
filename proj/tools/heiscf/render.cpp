// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <sstream>

#include "commands.hpp"

namespace heiscf::cli {

std::string fmt(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void flatten(const nlohmann::ordered_json& j, const std::string& prefix, Table& t) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, t);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), t);
  } else {
    t.rows.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
  }
}

}  // namespace

std::string render(const RunConfig& cfg, const CommandOutput& out) {
  std::ostringstream os;
  if (cfg.format == "json") {
    os << out.report.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    Table t = out.table;
    if (t.header.empty()) {
      t.header = {"key", "value"};
      flatten(out.report, "", t);
    }
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_cell(t.header[i]);
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
  } else {
    for (const auto& line : out.text) os << line << '\n';
  }
  return os.str();
}

}  // namespace heiscf::cli
