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
#include <string>
#include <string_view>
#include <vector>

namespace gravclocks::cli {

/// A cell passes when |got - expected| <= abs + rel |expected|. Cells that
/// do not both parse as numbers must match exactly.
struct Tolerance {
  double abs = 0.0;
  double rel = 1e-9;
};

/// Rules of the form
///
///   <file-glob> <column-glob> [abs=<x>] [rel=<y>]
///
/// one per line, '#' starts a comment. The last matching rule wins; with no
/// match the default Tolerance applies. PGM images use the column name
/// "pixel".
class ToleranceTable {
 public:
  static ToleranceTable parse(std::string_view text, const std::string& source = "<tolerances>");
  Tolerance lookup(const std::string& file, const std::string& column) const;

 private:
  struct Rule {
    std::string file;
    std::string column;
    Tolerance tol;
  };
  std::vector<Rule> rules_;
};

struct Mismatch {
  std::string case_name;
  std::string file;
  std::size_t row = 0;  // 1-based data row; 0 for structural problems
  std::string column;
  std::string got;
  std::string expected;
};

/// Compares one produced file against its golden copy; adds the number of
/// compared cells to *compared when given.
std::vector<Mismatch> compare_outputs(const std::string& case_name, const std::string& file,
                                      std::string_view got, std::string_view expected,
                                      const ToleranceTable& tolerances, std::size_t* compared = nullptr);

struct RegressionOptions {
  /// Holds configs/*.ini, expected/<config stem>/* and tolerances.txt.
  std::filesystem::path golden_root;
  /// Scratch directory for fresh outputs, one subdirectory per case.
  std::filesystem::path work_dir;
  std::size_t jobs = 1;
  /// Replace the expected files with fresh outputs instead of comparing.
  bool write_expected = false;
};

struct RegressionReport {
  std::size_t cases = 0;
  std::size_t files = 0;
  std::size_t cells = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  /// One line per mismatch followed by a totals line.
  std::string to_string(std::size_t max_lines = 50) const;
};

/// Re-runs every golden config and diffs its outputs. Configuration and
/// numerical-guard failures propagate as exceptions.
RegressionReport run_regression(const RegressionOptions& options);

}  // namespace gravclocks::cli
