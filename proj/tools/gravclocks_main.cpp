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


// gravclocks: scenario runner and golden-file regression driver.
//
// Exit codes: 0 success, 1 validation or I/O error, 2 numerical guard
// tripped, 3 golden mismatch.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gravclocks/cli/config.hpp"
#include "gravclocks/cli/csv.hpp"
#include "gravclocks/cli/regression.hpp"
#include "gravclocks/cli/scenarios.hpp"

#ifndef GRAVCLOCKS_GOLDEN_DIR
#define GRAVCLOCKS_GOLDEN_DIR "tests/golden"
#endif

namespace {

namespace fs = std::filesystem;
namespace gc = gravclocks::cli;

enum ExitCode { kOk = 0, kValidation = 1, kNumericalGuard = 2, kGoldenMismatch = 3 };

int run(int argc, char** argv) {
  CLI::App app{"Gravitationally interacting quantum clocks: scenario runner"};
  std::string config, out, golden = GRAVCLOCKS_GOLDEN_DIR;
  std::size_t jobs = 1;
  bool list = false, regression = false, write_golden = false;
  app.add_option("--config", config, "Scenario configuration file");
  app.add_option("--out", out, "Output directory (regression: scratch directory)");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--list-scenarios", list, "Print scenarios, parameters and outputs");
  app.add_flag("--regression", regression, "Re-run golden configs and diff against expected outputs");
  app.add_option("--golden", golden, "Golden directory for --regression")->capture_default_str();
  app.add_flag("--write-golden", write_golden, "With --regression, overwrite the expected outputs");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }

  if (list) {
    std::cout << gc::describe_scenarios();
    return kOk;
  }
  if (write_golden && !regression) {
    std::cerr << "error: --write-golden requires --regression\n";
    return kValidation;
  }

  if (regression) {
    gc::RegressionOptions opts;
    opts.golden_root = golden;
    opts.work_dir = out.empty() ? fs::temp_directory_path() / "gravclocks-regression" : fs::path(out);
    opts.jobs = jobs;
    opts.write_expected = write_golden;
    const gc::RegressionReport report = gc::run_regression(opts);
    std::cout << report.to_string();
    return report.ok() ? kOk : kGoldenMismatch;
  }

  if (config.empty()) {
    std::cerr << "error: one of --config, --regression or --list-scenarios is required\n";
    return kValidation;
  }
  const gc::ScenarioConfig cfg = gc::load_config(config);
  gc::RunOptions opts;
  opts.output_dir = out;
  opts.jobs = jobs;
  for (const auto& f : gc::run_scenario(cfg, opts)) std::cout << f.string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gc::NumericalGuardError& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return kNumericalGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
