// Copyright 2026 The qsd authors
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

// Locale-independent number formatting (12 significant digits via
// std::to_chars), exact pi-fraction angle parsing, and a small tabular
// writer emitting CSV (header row, LF endings) or a flat JSON array.

#pragma once

#include <charconv>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsd {

inline std::string format_significant(double v, int digits = 12) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

/// Angle parser: a plain decimal (radians), or a pi fraction such as "pi",
/// "pi/8", "3pi/16", "3*pi/16", "0.5pi". Pi fractions are evaluated as
/// coefficient * pi / denominator in double arithmetic, so landmark angles
/// stay exact to the last bit.
inline double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_angle: empty angle");

  auto parse_number = [](std::string_view sv, double fallback) -> double {
    if (sv.empty()) return fallback;
    double value = 0.0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (res.ec != std::errc() || res.ptr != sv.data() + sv.size()) {
      throw std::invalid_argument("parse_angle: malformed number '" + std::string(sv) + "'");
    }
    return value;
  };

  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) {
    return parse_number(s, 0.0);
  }

  std::string_view head(s.data(), pi_pos);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  double coefficient = 1.0;
  if (!head.empty()) {
    if (head == "-") {
      coefficient = -1.0;
    } else {
      coefficient = parse_number(head, 1.0);
    }
  }

  std::string_view tail(s.data() + pi_pos + 2, s.size() - pi_pos - 2);
  double denominator = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') {
      throw std::invalid_argument("parse_angle: expected '/' after pi in '" + text + "'");
    }
    tail.remove_prefix(1);
    denominator = parse_number(tail, 1.0);
    if (denominator == 0.0) throw std::invalid_argument("parse_angle: zero denominator");
  }
  return coefficient * std::numbers::pi / denominator;
}

enum class OutputFormat { csv, json };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("format must be 'csv' or 'json'");
}

/// Fixed-schema rows of numbers/integers/booleans/strings, printable as CSV
/// or as a JSON array of flat objects.
class RecordTable {
 public:
  using Cell = std::variant<double, long long, bool, std::string>;

  explicit RecordTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
      throw std::invalid_argument("RecordTable: row width does not match schema");
    }
    rows_.push_back(std::move(row));
  }

  void write(std::ostream& os, OutputFormat fmt) const {
    if (fmt == OutputFormat::csv) {
      write_csv(os);
    } else {
      write_json(os);
    }
  }

  void write_csv(std::ostream& os) const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (c) os << ',';
      os << columns_[c];
    }
    os << '\n';
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << ',';
        os << csv_text(row[c]);
      }
      os << '\n';
    }
  }

  void write_json(std::ostream& os) const {
    os << "[\n";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      os << "  {";
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c) os << ", ";
        os << '"' << columns_[c] << "\": " << json_text(rows_[r][c]);
      }
      os << (r + 1 < rows_.size() ? "},\n" : "}\n");
    }
    os << "]\n";
  }

 private:
  static std::string csv_text(const Cell& cell) {
    if (const double* d = std::get_if<double>(&cell)) return format_significant(*d);
    if (const long long* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    if (const bool* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return std::get<std::string>(cell);
  }

  static std::string json_text(const Cell& cell) {
    if (const double* d = std::get_if<double>(&cell)) {
      if (std::isnan(*d) || std::isinf(*d)) return "null";
      return format_significant(*d);
    }
    if (const long long* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    if (const bool* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return '"' + std::get<std::string>(cell) + '"';
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace qsd
