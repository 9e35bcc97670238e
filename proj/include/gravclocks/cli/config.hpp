// Copyright 2026 The gravclocks Authors
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

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gravclocks/units.hpp"

namespace gravclocks::cli {

/// Invalid configuration. The message carries "source:line:" when the
/// offending line is known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

enum class UnitSystem {
  kPlanck,  // tau, epsilon, xi as given
  kSI,      // seconds, electronvolts, metres
};

struct ConfigValue {
  std::string text;
  int line = 0;
};

/// Parsed configuration file:
///
///   [run]         scenario, units (planck | si), output_dir, seed
///   [parameters]  scenario-specific keys
///   [constants]   optional G, c, hbar overrides (SI)
///
/// Blank lines and lines starting with '#' or ';' are ignored.
struct ScenarioConfig {
  std::string source = "<config>";
  std::string scenario;
  UnitSystem units = UnitSystem::kPlanck;
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;
  std::map<std::string, ConfigValue> parameters;
  PhysicalScales scales = PhysicalScales::codata2018();
  int scenario_line = 0;
};

/// Throws ConfigError on malformed lines, duplicate or unknown keys and
/// sections, bad values and missing required run keys. Scenario parameters
/// are only collected here; see validate_parameters.
ScenarioConfig parse_config(std::string_view text, const std::string& source = "<config>");

/// Reads and parses a file; an unreadable file is a ConfigError at line 0.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Locale-independent parsing of a whole trimmed token.
bool parse_double(std::string_view s, double& out);
bool parse_int(std::string_view s, long long& out);

}  // namespace gravclocks::cli
