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

// Column tables and their frozen text encodings. Reals are written as
// {:.16e} (17 significant digits), non-finite reals as inf, -inf or nan.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qcollide {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws Error for an unknown column.
  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view name) const;
  const std::string& text(std::size_t row, std::string_view name) const;

  /// Keeps only the named columns, in the given order.
  Table select(const std::vector<std::string>& names) const;
  /// Rows of `other` appended; columns must match.
  void append(const Table& other);
};

std::string format_cell(const Cell& cell);

std::string to_csv(const Table& table);
/// {"columns": [...], "rows": [[...], ...]} with the same number formatting
/// as the CSV encoding; non-finite reals become strings.
std::string to_json_text(const Table& table);

enum class Format { kCsv, kJson };

Format parse_format(std::string_view name);
std::string_view extension(Format format);
std::string encode(const Table& table, Format format);

/// Creates parent directories as needed. Throws ConfigError when the path
/// cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace qcollide
