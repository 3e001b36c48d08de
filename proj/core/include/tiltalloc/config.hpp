// Copyright 2026 The tiltalloc Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tiltalloc/scenario.hpp"

namespace tiltalloc {

/// Output artifact names, relative to the run's output directory.
struct OutputSpec {
  std::string record = "record.csv";
  std::string tables = "tables.csv";
  std::string summary = "summary.txt";
};

struct ParsedScenario {
  Scenario scenario;
  OutputSpec output;
};

/// Parses the sectioned key = value scenario format. Angles are degrees in
/// the file and radians in the Scenario; spin rates are rad/s everywhere.
/// Unknown sections/keys, duplicate keys, missing required keys and
/// malformed values raise ConfigError with the offending line number. The
/// parsed scenario is validated (Scenario::validate).
ParsedScenario parse_scenario_text(std::string_view text,
                                   const std::string& name = "scenario");

ParsedScenario parse_scenario_file(const std::filesystem::path& path);

/// Canonical config text for a scenario; parsing it back yields an
/// identical scenario (initial spin rates are written out explicitly).
std::string serialize_scenario(const ParsedScenario& parsed);

}  // namespace tiltalloc
