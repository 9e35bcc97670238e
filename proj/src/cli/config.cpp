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


#include "gravclocks/cli/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gravclocks::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

std::string format_location(const std::string& source, int line) {
  return line > 0 ? source + ":" + std::to_string(line) + ": " : source + ": ";
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(format_location(source, line) + message), line_(line) {}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool parse_int(std::string_view s, long long& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

ScenarioConfig parse_config(std::string_view text, const std::string& source) {
  ScenarioConfig cfg;
  cfg.source = source;
  const std::set<std::string> sections{"run", "parameters", "constants"};
  const std::set<std::string> run_keys{"scenario", "units", "output_dir", "seed"};
  const std::set<std::string> constant_keys{"G", "c", "hbar"};

  std::string section;
  std::set<std::string> seen_sections;
  std::map<std::string, ConfigValue> run, constants;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#' || s.front() == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(source, line, "unterminated section header");
      const std::string name{trim(s.substr(1, s.size() - 2))};
      if (!sections.count(name)) throw ConfigError(source, line, "unknown section [" + name + "]");
      if (!seen_sections.insert(name).second)
        throw ConfigError(source, line, "duplicate section [" + name + "]");
      section = name;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ConfigError(source, line, "expected 'key = value'");
    const std::string key{trim(s.substr(0, eq))};
    const std::string value{trim(s.substr(eq + 1))};
    if (!valid_identifier(key)) throw ConfigError(source, line, "invalid key '" + key + "'");
    if (value.empty()) throw ConfigError(source, line, "empty value for '" + key + "'");
    if (section.empty()) throw ConfigError(source, line, "key '" + key + "' outside any section");

    std::map<std::string, ConfigValue>* target = &cfg.parameters;
    if (section == "run") {
      if (!run_keys.count(key)) throw ConfigError(source, line, "unknown key '" + key + "' in [run]");
      target = &run;
    } else if (section == "constants") {
      if (!constant_keys.count(key))
        throw ConfigError(source, line, "unknown key '" + key + "' in [constants]");
      target = &constants;
    }
    if (!target->emplace(key, ConfigValue{value, line}).second)
      throw ConfigError(source, line, "duplicate key '" + key + "'");
  }

  const auto scenario = run.find("scenario");
  if (scenario == run.end()) throw ConfigError(source, 0, "missing required key 'scenario' in [run]");
  cfg.scenario = scenario->second.text;
  cfg.scenario_line = scenario->second.line;

  const auto units = run.find("units");
  if (units == run.end()) throw ConfigError(source, 0, "missing required key 'units' in [run]");
  if (units->second.text == "planck") {
    cfg.units = UnitSystem::kPlanck;
  } else if (units->second.text == "si") {
    cfg.units = UnitSystem::kSI;
  } else {
    throw ConfigError(source, units->second.line, "units must be 'planck' or 'si'");
  }

  if (const auto it = run.find("output_dir"); it != run.end()) cfg.output_dir = it->second.text;
  if (const auto it = run.find("seed"); it != run.end()) {
    long long seed = 0;
    if (!parse_int(it->second.text, seed) || seed < 0)
      throw ConfigError(source, it->second.line, "seed must be a non-negative integer");
    cfg.seed = static_cast<std::uint64_t>(seed);
  }

  double G = kCodataG, c = kCodataC, hbar = kCodataHbar;
  for (auto& [key, v] : constants) {
    double x = 0.0;
    if (!parse_double(v.text, x) || !(x > 0.0))
      throw ConfigError(source, v.line, "constant '" + key + "' must be a positive number");
    (key == "G" ? G : key == "c" ? c : hbar) = x;
  }
  cfg.scales = PhysicalScales(G, c, hbar);
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot read config file");
  std::ostringstream text;
  text << in.rdbuf();
  ScenarioConfig cfg = parse_config(text.str(), path.string());
  return cfg;
}

}  // namespace gravclocks::cli
