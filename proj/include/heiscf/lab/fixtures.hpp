// SPDX-License-Identifier: Apache-2.0
#pragma once

// Expansion fixtures as JSON lines:
//   {"point": "...", "gamma0": "(u; v)", "digits": [...], "convergents": ["[q : r : p]", ...],
//    "terminated": bool, "backend": "exact" | "bigfloat" | "double", "bits": n}

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "heiscf/cf_engine.hpp"

namespace heiscf {

struct FixtureRecord {
  std::string point;
  IntegerPoint gamma0;
  std::vector<IntegerPoint> digits;
  std::vector<ProjIntPoint> convergents;
  bool terminated = false;
  std::string backend;
  unsigned bits = 0;

  friend bool operator==(const FixtureRecord&, const FixtureRecord&) = default;
};

template <class B>
FixtureRecord to_fixture(const CFExpansion<B>& e, std::string point_text) {
  return {std::move(point_text), e.gamma0, e.digits, e.convergents, e.terminated, std::string(B::name), e.bits};
}

std::string to_json_line(const FixtureRecord& f);
/// Throws std::invalid_argument on malformed input.
FixtureRecord parse_fixture_line(std::string_view line);

void write_fixtures(std::ostream& os, const std::vector<FixtureRecord>& fs);
/// Skips blank lines.
std::vector<FixtureRecord> read_fixtures(std::istream& is);

}  // namespace heiscf
