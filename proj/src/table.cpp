// Copyright 2026 The qcollide Authors
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

#include "qcollide/table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <system_error>

#include <fmt/format.h>
#include <json.hpp>

#include "qcollide/error.hpp"

namespace qcollide {

namespace {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.16e}", v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::size_t Table::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw Error(fmt::format("unknown column '{}'", name));
  return static_cast<std::size_t>(it - columns.begin());
}

double Table::number(std::size_t row, std::string_view name) const {
  const Cell& cell = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<long long>(&cell)) return double(*i);
  throw Error(fmt::format("column '{}' is not numeric", name));
}

const std::string& Table::text(std::size_t row, std::string_view name) const {
  return std::get<std::string>(rows.at(row).at(column(name)));
}

Table Table::select(const std::vector<std::string>& names) const {
  std::vector<std::size_t> idx;
  for (const std::string& n : names) {
    try {
      idx.push_back(column(n));
    } catch (const Error&) {
      throw ConfigError(fmt::format("unknown quantity '{}'", n));
    }
  }
  Table out;
  out.columns = names;
  out.rows.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Cell> r;
    r.reserve(idx.size());
    for (std::size_t i : idx) r.push_back(row[i]);
    out.rows.push_back(std::move(r));
  }
  return out;
}

void Table::append(const Table& other) {
  if (columns.empty() && rows.empty()) columns = other.columns;
  if (other.columns != columns) throw Error("Table::append: column mismatch");
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string format_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return fmt::format("{}", v);
        } else {
          return v;
        }
      },
      cell);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_field(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_field(format_cell(row[c]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const Table& table) {
  std::string out = "{\"columns\":[";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += json_string(table.columns[c]);
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r ? ",\n[" : "\n[";
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      const Cell& cell = row[c];
      const auto* d = std::get_if<double>(&cell);
      if (std::holds_alternative<std::string>(cell) || (d && !std::isfinite(*d))) {
        out += json_string(format_cell(cell));
      } else {
        out += format_cell(cell);
      }
    }
    out += ']';
  }
  out += "\n]}\n";
  return out;
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw ConfigError(fmt::format("unknown format '{}'", name));
}

std::string_view extension(Format format) { return format == Format::kCsv ? "csv" : "json"; }

std::string encode(const Table& table, Format format) {
  return format == Format::kCsv ? to_csv(table) : to_json_text(table);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
  out << text;
  out.flush();
  if (!out) throw ConfigError(fmt::format("cannot write '{}'", path.string()));
}

}  // namespace qcollide
