// Copyright 2026 The qgame Authors.
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

#ifndef QGAME_REPORT_H_
#define QGAME_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qgame {

// Floats in reports carry this many significant digits. Values are rounded
// when stored so the in-memory document equals what any export shows.
inline constexpr int kReportDigits = 12;

double RoundSignificant(double x, int digits = kReportDigits);
// Stored doubles smaller in magnitude than this are roundoff and read as 0.
inline constexpr double kReportZero = 1e-14;

using FieldValue = std::variant<bool, std::int64_t, double, std::string>;

// One self-describing result row. Field order is preserved.
struct Record {
  std::string kind;
  std::vector<std::pair<std::string, FieldValue>> fields;

  explicit Record(std::string k = {}) : kind(std::move(k)) {}

  Record& Add(std::string key, bool v);
  Record& Add(std::string key, int v) { return Add(std::move(key), std::int64_t{v}); }
  Record& Add(std::string key, std::int64_t v);
  Record& Add(std::string key, std::size_t v) {
    return Add(std::move(key), static_cast<std::int64_t>(v));
  }
  // Non-finite doubles are stored as the strings "nan", "inf", "-inf".
  Record& Add(std::string key, double v);
  Record& Add(std::string key, std::string v);
  Record& Add(std::string key, const char* v) { return Add(std::move(key), std::string(v)); }

  const FieldValue* Find(std::string_view key) const;
  std::optional<double> Number(std::string_view key) const;
  std::optional<std::string> Text(std::string_view key) const;

  bool operator==(const Record&) const = default;
};

// A report is a flat list of records. The first record conventionally has
// kind "report" and names, in its `csv_kind` field, which records form the
// rows of a CSV export.
struct ReportDocument {
  std::vector<Record> records;

  std::vector<const Record*> OfKind(std::string_view kind) const;
  void Append(const ReportDocument& other);
  bool operator==(const ReportDocument&) const = default;
};

enum class ExportFormat { kTextTable, kCsv, kJsonLines };

std::optional<ExportFormat> ParseExportFormat(std::string_view s);

std::string FormatValue(const FieldValue& v);
std::string Export(const ReportDocument& doc, ExportFormat format);

// Inverse of the json-lines export. Throws Error(kConfigError).
ReportDocument ParseJsonLines(std::string_view text);

}  // namespace qgame

#endif  // QGAME_REPORT_H_
