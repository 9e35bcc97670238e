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


#include "gravclocks/cli/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gravclocks::cli {

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

Cell Cell::real(double v) {
  if (!std::isfinite(v)) throw NumericalGuardError("non-finite value reached an output table");
  return Cell(format_real(v));
}

Cell Cell::integer(long long v) { return Cell(std::to_string(v)); }

Cell Cell::text(std::string s) { return Cell(std::move(s)); }

Cell Cell::probability(double p) {
  constexpr double kSlack = 1e-9;
  if (!std::isfinite(p) || p < -kSlack || p > 1.0 + kSlack)
    throw NumericalGuardError("probability outside [0, 1]: " + std::to_string(p));
  return real(std::clamp(p, 0.0, 1.0));
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw std::invalid_argument("CsvTable: empty header");
}

void CsvTable::add_row(std::vector<Cell> cells) {
  if (cells.size() != header_.size())
    throw std::invalid_argument("CsvTable: row width does not match header");
  std::vector<std::string> row;
  row.reserve(cells.size());
  for (auto& c : cells) row.push_back(c.str());
  rows_.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += quote_if_needed(fields[i]);
    }
    out += '\n';
  };
  emit(header_);
  for (const auto& r : rows_) emit(r);
  return out;
}

void SummaryTable::add(std::string name, Cell value) {
  table_.add_row({Cell::text(std::move(name)), std::move(value)});
}

ParsedCsv parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      if (!field.empty()) throw std::runtime_error("csv: stray quote in unquoted field");
      quoted = field_started = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      field_started = false;
    } else {
      field += ch;
      field_started = true;
    }
  }
  if (quoted) throw std::runtime_error("csv: unterminated quoted field");
  if (field_started || !field.empty()) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  if (records.empty()) throw std::runtime_error("csv: missing header");
  ParsedCsv out;
  out.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != out.header.size())
      throw std::runtime_error("csv: record " + std::to_string(r) + " has the wrong width");
    out.rows.push_back(std::move(records[r]));
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw OutputError("write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OutputError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace gravclocks::cli
