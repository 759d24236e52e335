// Copyright 2026 The frlab Authors. All Rights Reserved.
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

#ifndef FRLAB_TOOLS_REPORT_H_
#define FRLAB_TOOLS_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace frlab::cli {

using Json = nlohmann::ordered_json;

enum class ReportKind { kTable1, kTable2, kFigures, kShatter, kNorms };
enum class Format { kCsv, kJson, kMarkdown };

std::string_view ReportKindName(ReportKind kind);
std::optional<ReportKind> ParseReportKind(std::string_view name);
std::string_view FormatName(Format format);
std::optional<Format> ParseFormat(std::string_view name);

struct Column {
  enum class Type { kInteger, kReal, kText };
  std::string name;
  Type type = Type::kReal;
  int decimals = 4;  // kReal only; the fixed precision used in CSV/Markdown
};

// Empty cell, integer, real, or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Row {
  std::string label;   // sequence (or series) the row was computed from
  std::uint64_t length = 0;  // R
  std::vector<Cell> cells;   // aligned with ReportDoc::columns
};

struct ReportDoc {
  ReportKind kind = ReportKind::kTable1;
  Format format = Format::kCsv;
  std::vector<Column> columns;
  std::vector<Row> rows;
  Json config;  // effective configuration; enough to regenerate the doc
};

// Fixed column layout for each report kind.
std::vector<Column> ColumnsFor(ReportKind kind);

// "%.*f" with '.' as decimal separator regardless of locale.
std::string FormatFixed(double value, int decimals);

// CSV: header row, comma separated, LF endings, reals at the column's fixed
// precision. JSON carries full double precision plus the config echo.
std::string ToCsv(const ReportDoc& doc);
std::string ToJson(const ReportDoc& doc);
std::string ToMarkdown(const ReportDoc& doc);
std::string Serialize(const ReportDoc& doc);

// Inverse of ToCsv for a known report kind. Row labels and R are recovered
// from the "label"/"series" and "R" columns when present. Throws
// std::invalid_argument with the offending line number on malformed input.
ReportDoc ParseCsv(std::string_view text, ReportKind kind);

}  // namespace frlab::cli

#endif  // FRLAB_TOOLS_REPORT_H_
