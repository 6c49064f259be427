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

#include "qgame/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qgame/errors.h"

namespace qgame {
namespace {

using OrderedJson = nlohmann::ordered_json;

std::string FormatDouble(double v) {
  std::string s = fmt::format("{:.{}g}", v, kReportDigits);
  // Keep the float/integer distinction visible in every format.
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string JsonValue(const FieldValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return FormatDouble(x);
        else return OrderedJson(x).dump();
      },
      v);
}

std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Union of field names over `rows`. A key first seen in a later row goes
// right after the key preceding it in that row, so optional fields keep
// their place.
std::vector<std::string> Columns(const std::vector<const Record*>& rows) {
  std::vector<std::string> cols;
  for (const Record* r : rows) {
    auto at = cols.begin();
    for (const auto& [key, value] : r->fields) {
      auto it = std::find(cols.begin(), cols.end(), key);
      if (it == cols.end()) it = cols.insert(at, key);
      at = it + 1;
    }
  }
  return cols;
}

std::string Cell(const Record& r, const std::string& key) {
  const FieldValue* v = r.Find(key);
  return v ? FormatValue(*v) : "-";
}

std::string ExportText(const ReportDocument& doc) {
  std::vector<std::string> kinds;
  for (const auto& r : doc.records)
    if (std::find(kinds.begin(), kinds.end(), r.kind) == kinds.end()) kinds.push_back(r.kind);
  std::string out;
  for (const auto& kind : kinds) {
    const auto rows = doc.OfKind(kind);
    const auto cols = Columns(rows);
    // Multi-line values (the scenario echo) are printed as a block.
    if (cols.size() == 1 && rows.size() == 1 && Cell(*rows[0], cols[0]).find('\n') != std::string::npos) {
      out += fmt::format("== {} ==\n{}\n", kind, Cell(*rows[0], cols[0]));
      continue;
    }
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = cols[c].size();
      for (const Record* r : rows) width[c] = std::max(width[c], Cell(*r, cols[c]).size());
    }
    out += fmt::format("== {} ==\n", kind);
    auto line = [&](auto cell) {
      std::string s;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) s += "  ";
        s += fmt::format("{:<{}}", cell(c), width[c]);
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      return s + "\n";
    };
    out += line([&](std::size_t c) { return cols[c]; });
    out += line([&](std::size_t c) { return std::string(width[c], '-'); });
    for (const Record* r : rows) out += line([&](std::size_t c) { return Cell(*r, cols[c]); });
    out += "\n";
  }
  return out;
}

std::string ExportCsv(const ReportDocument& doc) {
  std::string kind;
  for (const Record* r : doc.OfKind("report"))
    if (auto k = r->Text("csv_kind")) kind = *k;
  const auto rows = doc.OfKind(kind);
  const auto cols = Columns(rows);
  std::string out;
  for (std::size_t c = 0; c < cols.size(); ++c) out += (c ? "," : "") + CsvEscape(cols[c]);
  out += "\n";
  for (const Record* r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const FieldValue* v = r->Find(cols[c]);
      out += (c ? "," : "") + (v ? CsvEscape(FormatValue(*v)) : std::string());
    }
    out += "\n";
  }
  return out;
}

std::string ExportJsonLines(const ReportDocument& doc) {
  std::string out;
  for (const auto& r : doc.records) {
    out += "{\"kind\":" + OrderedJson(r.kind).dump();
    for (const auto& [key, value] : r.fields) out += "," + OrderedJson(key).dump() + ":" + JsonValue(value);
    out += "}\n";
  }
  return out;
}

}  // namespace

double RoundSignificant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  const std::string s = fmt::format("{:.{}g}", x, digits);
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

Record& Record::Add(std::string key, bool v) {
  fields.emplace_back(std::move(key), v);
  return *this;
}

Record& Record::Add(std::string key, std::int64_t v) {
  fields.emplace_back(std::move(key), v);
  return *this;
}

Record& Record::Add(std::string key, double v) {
  if (std::isnan(v)) return Add(std::move(key), std::string("nan"));
  if (std::isinf(v)) return Add(std::move(key), std::string(v > 0 ? "inf" : "-inf"));
  fields.emplace_back(std::move(key), std::abs(v) < kReportZero ? 0.0 : RoundSignificant(v));
  return *this;
}

Record& Record::Add(std::string key, std::string v) {
  fields.emplace_back(std::move(key), std::move(v));
  return *this;
}

const FieldValue* Record::Find(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

std::optional<double> Record::Number(std::string_view key) const {
  const FieldValue* v = Find(key);
  if (!v) return std::nullopt;
  if (const auto* d = std::get_if<double>(v)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
  return std::nullopt;
}

std::optional<std::string> Record::Text(std::string_view key) const {
  const FieldValue* v = Find(key);
  if (!v) return std::nullopt;
  if (const auto* s = std::get_if<std::string>(v)) return *s;
  return std::nullopt;
}

std::vector<const Record*> ReportDocument::OfKind(std::string_view kind) const {
  std::vector<const Record*> out;
  for (const auto& r : records)
    if (r.kind == kind) out.push_back(&r);
  return out;
}

void ReportDocument::Append(const ReportDocument& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::optional<ExportFormat> ParseExportFormat(std::string_view s) {
  if (s == "text-table") return ExportFormat::kTextTable;
  if (s == "csv") return ExportFormat::kCsv;
  if (s == "json-lines") return ExportFormat::kJsonLines;
  return std::nullopt;
}

std::string FormatValue(const FieldValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return fmt::format("{:.{}g}", x, kReportDigits);
        else return x;
      },
      v);
}

std::string Export(const ReportDocument& doc, ExportFormat format) {
  switch (format) {
    case ExportFormat::kTextTable: return ExportText(doc);
    case ExportFormat::kCsv: return ExportCsv(doc);
    case ExportFormat::kJsonLines: return ExportJsonLines(doc);
  }
  return {};
}

ReportDocument ParseJsonLines(std::string_view text) {
  ReportDocument doc;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    OrderedJson j;
    try {
      j = OrderedJson::parse(line);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kConfigError, fmt::format("line {}: {}", line_no, e.what()));
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
      throw Error(ErrorCode::kConfigError, fmt::format("line {}: record without a kind", line_no));
    Record r(j["kind"].get<std::string>());
    for (const auto& [key, value] : j.items()) {
      if (key == "kind") continue;
      if (value.is_boolean()) r.fields.emplace_back(key, value.get<bool>());
      else if (value.is_number_integer()) r.fields.emplace_back(key, value.get<std::int64_t>());
      else if (value.is_number_float()) r.fields.emplace_back(key, value.get<double>());
      else if (value.is_string()) r.fields.emplace_back(key, value.get<std::string>());
      else
        throw Error(ErrorCode::kConfigError,
                    fmt::format("line {}: field '{}' has an unsupported type", line_no, key));
    }
    doc.records.push_back(std::move(r));
  }
  return doc;
}

}  // namespace qgame
