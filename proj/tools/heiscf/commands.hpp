// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace heiscf::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kCertification = 3 };

struct RunConfig {
  std::string command;
  std::optional<std::string> point;
  std::optional<std::string> heis;
  std::optional<std::size_t> depth;
  unsigned bits = 256;
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::optional<std::int64_t> m_max;
  double epsilon = 1.0;
  double bigc = 1.0;
  std::optional<double> bound;
  std::string domain = "dirichlet";
  std::string format = "text";
  std::string out;
  unsigned threads = 1;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CommandOutput {
  nlohmann::ordered_json report;
  Table table;
  std::vector<std::string> text;
  int exit_code = kOk;
};

/// Raised for malformed flag values; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CommandOutput cmd_constants(const RunConfig& cfg);
CommandOutput cmd_expand(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg);
CommandOutput cmd_measure(const RunConfig& cfg);
CommandOutput cmd_bestapprox(const RunConfig& cfg);
CommandOutput cmd_count(const RunConfig& cfg);
CommandOutput cmd_khinchin(const RunConfig& cfg);

/// Renders in cfg.format.
std::string render(const RunConfig& cfg, const CommandOutput& out);

std::string fmt(double x, int digits = 6);

}  // namespace heiscf::cli
