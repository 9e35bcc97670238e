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


#include "gravclocks/cli/regression.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gravclocks/cli/config.hpp"
#include "gravclocks/cli/csv.hpp"
#include "gravclocks/cli/scenarios.hpp"

namespace gravclocks::cli {

namespace {

namespace fs = std::filesystem;

bool glob_match(const std::string& pattern, const std::string& s) {
  return fnmatch(pattern.c_str(), s.c_str(), 0) == 0;
}

bool cells_agree(const std::string& got, const std::string& expected, const Tolerance& tol) {
  if (got == expected) return true;
  double g = 0.0, e = 0.0;
  if (!parse_double(got, g) || !parse_double(expected, e)) return false;
  return std::abs(g - e) <= tol.abs + tol.rel * std::abs(e);
}

std::vector<std::string> pgm_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  return tokens;
}

std::vector<fs::path> sorted_entries(const fs::path& dir, const std::string& extension = {}) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && (extension.empty() || e.path().extension() == extension)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ToleranceTable ToleranceTable::parse(std::string_view text, const std::string& source) {
  ToleranceTable table;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Rule rule;
    if (!(words >> rule.file)) continue;
    if (!(words >> rule.column)) throw ConfigError(source, line, "expected '<file> <column> [abs=x] [rel=y]'");
    std::string item;
    while (words >> item) {
      const auto eq = item.find('=');
      double v = 0.0;
      if (eq == std::string::npos || !parse_double(item.substr(eq + 1), v) || v < 0.0)
        throw ConfigError(source, line, "bad tolerance '" + item + "'");
      const std::string key = item.substr(0, eq);
      if (key == "abs") rule.tol.abs = v;
      else if (key == "rel") rule.tol.rel = v;
      else throw ConfigError(source, line, "unknown tolerance key '" + key + "'");
    }
    table.rules_.push_back(std::move(rule));
  }
  return table;
}

Tolerance ToleranceTable::lookup(const std::string& file, const std::string& column) const {
  Tolerance tol;
  for (const auto& r : rules_)
    if (glob_match(r.file, file) && glob_match(r.column, column)) tol = r.tol;
  return tol;
}

std::vector<Mismatch> compare_outputs(const std::string& case_name, const std::string& file,
                                      std::string_view got, std::string_view expected,
                                      const ToleranceTable& tolerances, std::size_t* compared) {
  std::vector<Mismatch> out;
  std::size_t local = 0;
  std::size_t& cells = compared ? *compared : local;
  auto structural = [&](const std::string& what, const std::string& g, const std::string& e) {
    out.push_back({case_name, file, 0, what, g, e});
  };

  if (fs::path(file).extension() == ".pgm") {
    const auto g = pgm_tokens(got), e = pgm_tokens(expected);
    if (g.size() != e.size()) {
      structural("token count", std::to_string(g.size()), std::to_string(e.size()));
      return out;
    }
    const Tolerance tol = tolerances.lookup(file, "pixel");
    cells += g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!cells_agree(g[i], e[i], tol)) out.push_back({case_name, file, i + 1, "pixel", g[i], e[i]});
    return out;
  }

  ParsedCsv g, e;
  try {
    g = parse_csv(got);
    e = parse_csv(expected);
  } catch (const std::runtime_error& err) {
    structural("parse", err.what(), "");
    return out;
  }
  if (g.header != e.header) {
    std::string gh, eh;
    for (const auto& h : g.header) gh += (gh.empty() ? "" : ",") + h;
    for (const auto& h : e.header) eh += (eh.empty() ? "" : ",") + h;
    structural("header", gh, eh);
    return out;
  }
  if (g.rows.size() != e.rows.size()) {
    structural("row count", std::to_string(g.rows.size()), std::to_string(e.rows.size()));
    return out;
  }
  // Summary tables name each row in their first column; use it as the label.
  const bool summary = e.header.size() == 2 && e.header[0] == "quantity";
  cells += e.rows.size() * e.header.size();
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (std::size_t c = 0; c < e.header.size(); ++c) {
      const std::string column = summary && c == 1 ? e.rows[r][0] : e.header[c];
      if (!cells_agree(g.rows[r][c], e.rows[r][c], tolerances.lookup(file, column)))
        out.push_back({case_name, file, r + 1, column, g.rows[r][c], e.rows[r][c]});
    }
  return out;
}

std::string RegressionReport::to_string(std::size_t max_lines) const {
  std::ostringstream s;
  for (std::size_t i = 0; i < mismatches.size() && i < max_lines; ++i) {
    const Mismatch& m = mismatches[i];
    s << "MISMATCH " << m.case_name << "/" << m.file;
    if (m.row) s << " row " << m.row;
    s << " [" << m.column << "]: got " << m.got << ", expected " << m.expected << "\n";
  }
  if (mismatches.size() > max_lines) s << "... " << mismatches.size() - max_lines << " more\n";
  s << "regression: " << cases << " cases, " << files << " files, " << cells << " cells compared, "
    << mismatches.size() << " mismatches\n";
  return s.str();
}

RegressionReport run_regression(const RegressionOptions& options) {
  const fs::path configs = options.golden_root / "configs";
  const fs::path expected_root = options.golden_root / "expected";
  const fs::path tol_path = options.golden_root / "tolerances.txt";
  const ToleranceTable tolerances = fs::exists(tol_path)
                                        ? ToleranceTable::parse(read_text_file(tol_path), tol_path.string())
                                        : ToleranceTable{};
  const auto cases = sorted_entries(configs, ".ini");
  if (cases.empty()) throw ConfigError(configs.string(), 0, "no golden configs found");

  RegressionReport report;
  for (const fs::path& config_path : cases) {
    const std::string name = config_path.stem().string();
    const ScenarioConfig cfg = load_config(config_path);
    const fs::path work = options.work_dir / name;
    std::error_code ec;
    fs::remove_all(work, ec);
    RunOptions run;
    run.output_dir = work;
    run.jobs = options.jobs;
    const auto produced = run_scenario(cfg, run);
    ++report.cases;

    const fs::path expected_dir = expected_root / name;
    if (options.write_expected) {
      fs::remove_all(expected_dir, ec);
      fs::create_directories(expected_dir);
      for (const auto& f : produced) write_text_file(expected_dir / f.filename(), read_text_file(f));
      report.files += produced.size();
      continue;
    }

    std::set<std::string> produced_names;
    for (const auto& f : produced) produced_names.insert(f.filename().string());
    const auto expected_files = sorted_entries(expected_dir);
    if (expected_files.empty())
      report.mismatches.push_back({name, "", 0, "expected files", "", "missing " + expected_dir.string()});
    for (const auto& ef : expected_files) {
      const std::string file = ef.filename().string();
      if (!produced_names.erase(file)) {
        report.mismatches.push_back({name, file, 0, "file", "not produced", "present"});
        continue;
      }
      const std::string got = read_text_file(work / file), want = read_text_file(ef);
      auto m = compare_outputs(name, file, got, want, tolerances, &report.cells);
      report.mismatches.insert(report.mismatches.end(), m.begin(), m.end());
      ++report.files;
    }
    for (const auto& extra : produced_names)
      report.mismatches.push_back({name, extra, 0, "file", "produced", "no golden copy"});
  }
  return report;
}

}  // namespace gravclocks::cli
