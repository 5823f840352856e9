// Copyright 2026 The clickcounter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace clickcounter::cli {

using Cell = std::variant<std::uint64_t, std::int64_t, double, std::string, bool>;
using Record = std::vector<std::pair<std::string, Cell>>;

/// Tabular output shared by every subcommand. Rows are emitted in insertion
/// order; `summary` holds optional trailing records (temporal optima).
struct Table {
  Record meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Record> summary;

  void add_meta(std::string key, Cell value);
  /// Throws std::logic_error when the row width differs from `columns`.
  void add_row(std::vector<Cell> row);
};

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);
std::string format_cell(const Cell& cell);

/// `# key=value` lines, one header row, data rows, then `# summary ...` lines.
void write_csv(const Table& table, std::ostream& out);
/// {"meta": {...}, "rows": [{column: value}, ...], "summary": [...]}; the
/// summary key is present only when non-empty.
void write_json(const Table& table, std::ostream& out);

}  // namespace clickcounter::cli
