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

#include "report.h"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <type_traits>

namespace frlab::cli {
namespace {

using Type = Column::Type;

std::string CellText(const Cell& cell, const Column& column) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return FormatFixed(v, column.decimals);
        } else {
          return v;
        }
      },
      cell);
}

std::string CsvEscape(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> SplitCsvLine(std::string_view line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) {
    throw std::invalid_argument("line " + std::to_string(lineno) +
                                ": unterminated quote");
  }
  fields.push_back(std::move(current));
  return fields;
}

std::optional<std::int64_t> ParseInt(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> ParseReal(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Json CellJson(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

std::string_view ReportKindName(ReportKind kind) {
  switch (kind) {
    case ReportKind::kTable1:
      return "table1";
    case ReportKind::kTable2:
      return "table2";
    case ReportKind::kFigures:
      return "figures";
    case ReportKind::kShatter:
      return "shatter";
    case ReportKind::kNorms:
      return "norms";
  }
  return "unknown";
}

std::optional<ReportKind> ParseReportKind(std::string_view name) {
  for (ReportKind k : {ReportKind::kTable1, ReportKind::kTable2,
                       ReportKind::kFigures, ReportKind::kShatter,
                       ReportKind::kNorms}) {
    if (ReportKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kCsv:
      return "csv";
    case Format::kJson:
      return "json";
    case Format::kMarkdown:
      return "markdown";
  }
  return "unknown";
}

std::optional<Format> ParseFormat(std::string_view name) {
  for (Format f : {Format::kCsv, Format::kJson, Format::kMarkdown}) {
    if (FormatName(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<Column> ColumnsFor(ReportKind kind) {
  switch (kind) {
    case ReportKind::kTable1:
      return {{"R", Type::kInteger, 0},
              {"sf_density", Type::kReal, 4},
              {"l2_over_sqrtR", Type::kReal, 4},
              {"l1_over_sqrtR", Type::kReal, 4},
              {"fourier_ratio", Type::kReal, 4},
              {"linf_over_sqrtR", Type::kReal, 2}};
    case ReportKind::kTable2:
      return {{"label", Type::kText, 0},
              {"fourier_ratio", Type::kReal, 4},
              {"l2_over_sqrtR", Type::kReal, 4}};
    case ReportKind::kFigures:
      return {{"series", Type::kText, 0},
              {"x", Type::kText, 0},
              {"y", Type::kReal, 8}};
    case ReportKind::kShatter:
      return {{"pattern", Type::kInteger, 0},
              {"sigma", Type::kText, 0},
              {"best_fourier_ratio", Type::kReal, 6},
              {"attempts", Type::kInteger, 0},
              {"met_threshold", Type::kInteger, 0}};
    case ReportKind::kNorms:
      return {{"label", Type::kText, 0},
              {"R", Type::kInteger, 0},
              {"M", Type::kInteger, 0},
              {"l1", Type::kReal, 10},
              {"l2", Type::kReal, 10},
              {"linf", Type::kReal, 10},
              {"fourier_ratio", Type::kReal, 10},
              {"l1_error_indicator", Type::kReal, 12},
              {"linf_correction_bound", Type::kReal, 10}};
  }
  return {};
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  if (n < 0 || n >= static_cast<int>(sizeof(buf))) {
    throw std::runtime_error("FormatFixed: value does not fit");
  }
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string ToCsv(const ReportDoc& doc) {
  std::string out;
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += doc.columns[c].name;
  }
  out += '\n';
  for (const Row& row : doc.rows) {
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
      if (c > 0) out += ',';
      if (c < row.cells.size()) {
        out += CsvEscape(CellText(row.cells[c], doc.columns[c]));
      }
    }
    out += '\n';
  }
  return out;
}

std::string ToJson(const ReportDoc& doc) {
  Json root;
  root["kind"] = ReportKindName(doc.kind);
  root["config"] = doc.config;
  Json rows = Json::array();
  for (const Row& row : doc.rows) {
    Json r;
    r["label"] = row.label;
    r["R"] = row.length;
    for (std::size_t c = 0; c < doc.columns.size() && c < row.cells.size();
         ++c) {
      r[doc.columns[c].name] = CellJson(row.cells[c]);
    }
    rows.push_back(std::move(r));
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string ToMarkdown(const ReportDoc& doc) {
  std::string out = "## ";
  out += ReportKindName(doc.kind);
  out += "\n\nconfig: `" + doc.config.dump() + "`\n\n|";
  for (const Column& col : doc.columns) out += " " + col.name + " |";
  out += "\n|";
  for (const Column& col : doc.columns) {
    out += col.type == Type::kText ? " --- |" : " ---: |";
  }
  out += '\n';
  for (const Row& row : doc.rows) {
    out += '|';
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
      const std::string text =
          c < row.cells.size() ? CellText(row.cells[c], doc.columns[c]) : "";
      out += " " + text + " |";
    }
    out += '\n';
  }
  return out;
}

std::string Serialize(const ReportDoc& doc) {
  switch (doc.format) {
    case Format::kCsv:
      return ToCsv(doc);
    case Format::kJson:
      return ToJson(doc);
    case Format::kMarkdown:
      return ToMarkdown(doc);
  }
  return {};
}

ReportDoc ParseCsv(std::string_view text, ReportKind kind) {
  ReportDoc doc;
  doc.kind = kind;
  doc.format = Format::kCsv;
  doc.columns = ColumnsFor(kind);

  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    const auto fields = SplitCsvLine(line, lineno);
    if (!saw_header) {
      saw_header = true;
      if (fields.size() != doc.columns.size()) {
        throw std::invalid_argument("line 1: expected " +
                                    std::to_string(doc.columns.size()) +
                                    " columns");
      }
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (fields[c] != doc.columns[c].name) {
          throw std::invalid_argument("line 1: expected column '" +
                                      doc.columns[c].name + "', got '" +
                                      fields[c] + "'");
        }
      }
      continue;
    }
    if (fields.size() != doc.columns.size()) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": wrong number of fields");
    }
    Row row;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const Column& col = doc.columns[c];
      const std::string& f = fields[c];
      Cell cell;
      if (f.empty()) {
        cell = std::monostate{};
      } else if (col.type == Type::kReal) {
        auto v = ParseReal(f);
        if (!v) {
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": '" + f + "' is not a number");
        }
        cell = *v;
      } else if (col.type == Type::kInteger) {
        // Summary rows may carry text in integer columns.
        if (auto v = ParseInt(f)) {
          cell = *v;
        } else {
          cell = f;
        }
      } else {
        cell = f;
      }
      if (col.name == "R" && std::holds_alternative<std::int64_t>(cell)) {
        row.length = static_cast<std::uint64_t>(std::get<std::int64_t>(cell));
      }
      if ((col.name == "label" || col.name == "series") &&
          std::holds_alternative<std::string>(cell)) {
        row.label = std::get<std::string>(cell);
      }
      row.cells.push_back(std::move(cell));
    }
    doc.rows.push_back(std::move(row));
  }
  if (!saw_header) throw std::invalid_argument("line 1: missing header");
  return doc;
}

}  // namespace frlab::cli
