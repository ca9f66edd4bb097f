// Copyright 2026 The ndpo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ndpo/cross_validation.hpp"

namespace ndpo::validation {

bool ValidationReport::passed() const { return failures() == 0; }

std::size_t ValidationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (!c.skipped && !c.passed) ? 1 : 0;
  return n;
}

void ValidationReport::merge(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  tails.insert(tails.end(), other.tails.begin(), other.tails.end());
  wall_seconds += other.wall_seconds;
}

namespace {

// JSON has no infinity; non-finite deviations become null.
nlohmann::json number(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

std::string to_json(const ValidationReport& report) {
  nlohmann::json j;
  j["passed"] = report.passed();
  j["failures"] = report.failures();
  j["wall_seconds"] = report.wall_seconds;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json e{{"tag", c.tag},
                     {"description", c.description},
                     {"deviation", number(c.deviation)},
                     {"tolerance", c.tolerance},
                     {"passed", c.passed},
                     {"skipped", c.skipped},
                     {"worst_input", c.worst_input}};
    if (c.skipped) e["skip_reason"] = c.skip_reason;
    j["checks"].push_back(std::move(e));
  }
  j["tails"] = nlohmann::json::array();
  for (const auto& t : report.tails) {
    j["tails"].push_back({{"case", t.case_name},
                          {"max_tail", number(t.max_tail)},
                          {"n_cut_c", t.n_cut_c},
                          {"n_cut_d", t.n_cut_d},
                          {"frame_c", t.frame_c},
                          {"frame_d", t.frame_d},
                          {"converged", t.converged},
                          {"notes", t.notes}});
  }
  return j.dump(2);
}

std::string summary_table(const ValidationReport& report) {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-34s %-6s %12s %12s  %s\n", "check", "status",
                "deviation", "tolerance", "worst input");
  os << line;
  for (const auto& c : report.checks) {
    const char* status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
    std::snprintf(line, sizeof line, "%-34s %-6s %12.3e %12.3e  %s\n", c.tag.c_str(), status,
                  c.deviation, c.tolerance,
                  c.skipped ? c.skip_reason.c_str() : c.worst_input.c_str());
    os << line;
  }
  std::snprintf(line, sizeof line, "%zu checks, %zu failed, %.2f s\n", report.checks.size(),
                report.failures(), report.wall_seconds);
  os << line;
  return os.str();
}

}  // namespace ndpo::validation
