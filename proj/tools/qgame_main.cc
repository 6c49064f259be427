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

// qgame: scenario runner and reproduction harness.
//
//   qgame analyze <config.yaml> [--format F] [--out FILE]
//   qgame reproduce <fixture-id|all> [--format F] [--out FILE]
//   qgame list-fixtures [--format F]
//
// Exit status: 0 all comparisons pass, 1 numeric mismatch, 2 config or usage
// error. QGAME_THREADS caps the worker count.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qgame/errors.h"
#include "qgame/fixtures.h"
#include "qgame/report.h"
#include "qgame/scenario.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int Emit(const qgame::ReportDocument& doc, qgame::ExportFormat format, const std::string& out) {
  const std::string text = qgame::Export(doc, format);
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    return kExitOk;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    fmt::print(stderr, "qgame: cannot write '{}'\n", out);
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized Welfare game analysis and reproduction harness"};
  app.require_subcommand(1);
  std::string format_name = "text-table";
  std::string out_path;
  app.add_option("--format", format_name, "text-table, csv or json-lines")
      ->check(CLI::IsMember({"text-table", "csv", "json-lines"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "run a scenario file")->fallthrough();
  std::string config_path;
  analyze->add_option("config", config_path, "scenario YAML")->required();

  auto* reproduce = app.add_subcommand("reproduce", "reproduce embedded fixtures")->fallthrough();
  std::string target;
  reproduce->add_option("target", target, "fixture id or 'all'")->required();

  auto* list = app.add_subcommand("list-fixtures", "list embedded fixtures")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }
  const qgame::ExportFormat format = *qgame::ParseExportFormat(format_name);
  const auto start = std::chrono::steady_clock::now();

  try {
    if (*list) {
      qgame::ReportDocument doc;
      qgame::Record header("report");
      header.Add("tool", "qgame").Add("mode", "list-fixtures").Add("csv_kind", "fixture");
      doc.records.push_back(header);
      for (const auto& f : qgame::ListFixtures()) {
        qgame::Record r("fixture");
        r.Add("id", f.id).Add("title", f.title).Add("location", f.location);
        doc.records.push_back(std::move(r));
      }
      return Emit(doc, format, out_path);
    }

    if (*analyze) {
      const qgame::ScenarioConfig cfg = qgame::LoadScenarioFile(config_path);
      const qgame::ReportDocument doc = qgame::RunScenario(cfg);
      fmt::print(stderr, "qgame: {} finished in {:.2f}s\n", qgame::ScenarioModeName(cfg.mode),
                 Seconds(start));
      return Emit(doc, format, out_path);
    }

    std::vector<std::string> ids;
    if (target == "all") {
      for (const auto& f : qgame::ListFixtures()) ids.push_back(f.id);
    } else {
      ids.push_back(target);
    }
    qgame::ReportDocument doc;
    bool all_pass = true;
    for (const auto& id : ids) {
      const auto t0 = std::chrono::steady_clock::now();
      const qgame::FixtureOutcome outcome = qgame::RunFixture(id);
      all_pass = all_pass && outcome.passed();
      fmt::print(stderr, "qgame: {:<12} {} ({} comparisons, {} failed) {:.2f}s\n", id,
                 outcome.passed() ? "pass" : "FAIL", outcome.comparisons.size(),
                 outcome.failures(), Seconds(t0));
      doc.Append(qgame::FixtureReport(outcome));
    }
    const int rc = Emit(doc, format, out_path);
    if (rc != kExitOk) return rc;
    return all_pass ? kExitOk : kExitMismatch;
  } catch (const qgame::Error& e) {
    fmt::print(stderr, "qgame: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "qgame: error: {}\n", e.what());
    return kExitUsage;
  }
}
