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

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gravclocks/cli/config.hpp"

namespace gravclocks::cli {

/// Physical dimension of a parameter. Under units = si, times are read in
/// seconds, energies in electronvolts and lengths in metres; under
/// units = planck all values are taken as Planck-unit numbers.
enum class Quantity { kDimensionless, kTime, kEnergy, kLength };

enum class ParamKind { kNumber, kInteger, kNumberList, kIntegerList, kChoice };

enum class Bound { kAny, kPositive, kNonNegative, kUnitInterval };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::kNumber;
  Quantity quantity = Quantity::kDimensionless;
  Bound bound = Bound::kPositive;
  std::optional<std::string> default_value;  // required when empty
  std::string help;
  std::vector<std::string> choices;          // kChoice only
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::vector<std::string> outputs;
};

/// All scenarios in a fixed order.
const std::vector<ScenarioInfo>& scenario_catalog();
const ScenarioInfo& scenario_info(const std::string& name);

/// Parameters after validation and conversion to Planck units.
class Parameters {
 public:
  using Value = std::variant<double, long long, std::vector<double>, std::vector<long long>, std::string>;

  bool has(const std::string& name) const;
  double number(const std::string& name) const;
  long long integer(const std::string& name) const;
  const std::vector<double>& numbers(const std::string& name) const;
  const std::vector<long long>& integers(const std::string& name) const;
  const std::string& choice(const std::string& name) const;

  void set(const std::string& name, Value v) { values_[name] = std::move(v); }

 private:
  const Value& at(const std::string& name) const;
  std::map<std::string, Value> values_;
};

/// Checks the scenario name, rejects unknown parameter keys, fills defaults,
/// parses and bounds-checks every value and converts SI inputs. Throws
/// ConfigError carrying the offending line.
Parameters validate_parameters(const ScenarioConfig& cfg);

struct RunOptions {
  std::filesystem::path output_dir;  // overrides cfg.output_dir when set
  std::size_t jobs = 1;
};

/// Runs the configured scenario and writes its files into the output
/// directory (created if needed). Returns the written paths in a fixed order.
/// Throws ConfigError, NumericalGuardError or OutputError.
std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& cfg, const RunOptions& options);

/// Human-readable catalog for --list-scenarios.
std::string describe_scenarios();

}  // namespace gravclocks::cli
