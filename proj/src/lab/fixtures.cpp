// SPDX-License-Identifier: Apache-2.0
#include "heiscf/lab/fixtures.hpp"

#include <istream>
#include <json.hpp>
#include <ostream>

namespace heiscf {

using nlohmann::json;

std::string to_json_line(const FixtureRecord& f) {
  json j;
  j["point"] = f.point;
  j["gamma0"] = to_string(f.gamma0);
  j["digits"] = json::array();
  for (const auto& d : f.digits) j["digits"].push_back(to_string(d));
  j["convergents"] = json::array();
  for (const auto& c : f.convergents) j["convergents"].push_back(to_string(c));
  j["terminated"] = f.terminated;
  j["backend"] = f.backend;
  j["bits"] = f.bits;
  return j.dump();
}

FixtureRecord parse_fixture_line(std::string_view line) {
  try {
    const json j = json::parse(line);
    FixtureRecord f;
    f.point = j.at("point").get<std::string>();
    f.gamma0 = parse_integer_point(j.at("gamma0").get<std::string>());
    for (const auto& d : j.at("digits")) f.digits.push_back(parse_integer_point(d.get<std::string>()));
    for (const auto& c : j.at("convergents")) f.convergents.push_back(parse_proj_point(c.get<std::string>()));
    f.terminated = j.at("terminated").get<bool>();
    f.backend = j.at("backend").get<std::string>();
    f.bits = j.at("bits").get<unsigned>();
    return f;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("bad fixture line: ") + ex.what());
  }
}

void write_fixtures(std::ostream& os, const std::vector<FixtureRecord>& fs) {
  for (const auto& f : fs) os << to_json_line(f) << '\n';
}

std::vector<FixtureRecord> read_fixtures(std::istream& is) {
  std::vector<FixtureRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_fixture_line(line));
  }
  return out;
}

}  // namespace heiscf
