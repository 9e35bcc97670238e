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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gravclocks::cli {

/// A non-finite value or out-of-range probability reached an output table.
class NumericalGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An output file could not be created or written.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pre-formatted CSV cell. Reals use 17 significant digits in scientific
/// notation, so every double round-trips exactly.
class Cell {
 public:
  /// Throws NumericalGuardError for NaN or infinity.
  static Cell real(double v);
  static Cell integer(long long v);
  static Cell text(std::string s);
  /// Real in [0, 1]; rounding excursions up to 1e-9 are clamped, anything
  /// larger throws NumericalGuardError.
  static Cell probability(double p);

  const std::string& str() const { return s_; }

 private:
  explicit Cell(std::string s) : s_(std::move(s)) {}
  std::string s_;
};

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Throws std::invalid_argument if the width does not match the header.
  void add_row(std::vector<Cell> cells);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  /// RFC 4180 text with CRLF-free '\n' line endings.
  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Two-column (quantity, value) table for scalar results.
class SummaryTable {
 public:
  void add(std::string name, Cell value);
  const CsvTable& table() const { return table_; }

 private:
  CsvTable table_{{"quantity", "value"}};
};

struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Parses RFC 4180 text (quoted fields allowed). Throws std::runtime_error
/// on a malformed record.
ParsedCsv parse_csv(std::string_view text);

std::string format_real(double v);

/// Writes text to path; throws OutputError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gravclocks::cli
