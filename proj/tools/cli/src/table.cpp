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

#include "clickcounter/cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace clickcounter::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string csv_field(const Cell& cell) {
  std::string text = format_cell(cell);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit(Overloaded{[](double v) -> nlohmann::ordered_json {
                                 if (!std::isfinite(v)) return nullptr;
                                 return v;
                               },
                               [](const auto& v) -> nlohmann::ordered_json { return v; }},
                    cell);
}

nlohmann::ordered_json to_json(const Record& record) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record) obj[key] = to_json(value);
  return obj;
}

}  // namespace

void Table::add_meta(std::string key, Cell value) { meta.emplace_back(std::move(key), std::move(value)); }

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row has " + std::to_string(row.size()) + " cells, table has " +
                           std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_cell(const Cell& cell) {
  return std::visit(Overloaded{[](std::uint64_t v) { return std::to_string(v); },
                               [](std::int64_t v) { return std::to_string(v); },
                               [](double v) { return format_double(v); },
                               [](const std::string& v) { return v; },
                               [](bool v) { return std::string(v ? "true" : "false"); }},
                    cell);
}

void write_csv(const Table& table, std::ostream& out) {
  for (const auto& [key, value] : table.meta) out << "# " << key << '=' << format_cell(value) << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
    out << '\n';
  }
  for (const auto& record : table.summary) {
    out << "# summary";
    for (const auto& [key, value] : record) out << ' ' << key << '=' << format_cell(value);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = to_json(table.meta);
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = to_json(row[c]);
    rows.push_back(std::move(obj));
  }
  if (!table.summary.empty()) {
    auto& summary = doc["summary"] = nlohmann::ordered_json::array();
    for (const auto& record : table.summary) summary.push_back(to_json(record));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace clickcounter::cli
