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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "frlab/errors.h"
#include "oracles.h"

namespace frlab::cli {
namespace {

namespace fs = std::filesystem;

double RealCell(const Row& row, std::size_t c) {
  return std::get<double>(row.cells[c]);
}

RunConfig Table1Config(std::vector<std::size_t> lengths) {
  RunConfig config;
  config.command = ReportKind::kTable1;
  config.lengths = std::move(lengths);
  return config;
}

// Parse back through the CSV so the comparison is on printed digits.
std::vector<std::string> CsvFields(const ReportDoc& doc, std::size_t row) {
  const std::string csv = ToCsv(doc);
  std::istringstream in(csv);
  std::string line;
  for (std::size_t i = 0; i <= row + 1; ++i) std::getline(in, line);
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

TEST(RunTable1Test, TenThousandRow) {
  const ReportDoc doc = RunTable1(Table1Config({10'000}));
  ASSERT_EQ(doc.rows.size(), 1u);
  const Row& row = doc.rows[0];
  EXPECT_EQ(row.label, "mobius");
  EXPECT_EQ(row.length, 10'000u);
  EXPECT_NEAR(RealCell(row, 1), 0.6083, 5e-5);
  EXPECT_NEAR(RealCell(row, 2), 0.7799, 5e-5);
  EXPECT_NEAR(RealCell(row, 3), 0.6202, 0.002);
  EXPECT_NEAR(RealCell(row, 4), 0.7953, 0.002);
  EXPECT_NEAR(RealCell(row, 5), 4.52, 0.05);
}

TEST(RunTable1Test, HundredRow) {
  const ReportDoc doc = RunTable1(Table1Config({100}));
  const Row& row = doc.rows[0];
  EXPECT_NEAR(RealCell(row, 1), 0.6100, 5e-5);
  EXPECT_NEAR(RealCell(row, 2), 0.7810, 5e-5);
  EXPECT_NEAR(RealCell(row, 3), 0.6160, 0.002);
  EXPECT_NEAR(RealCell(row, 4), 0.7887, 0.002);
  EXPECT_NEAR(RealCell(row, 5), 3.37, 0.05);
}

TEST(RunTable1Test, SingleTermUnderModulus) {
  RunConfig config = Table1Config({1});
  config.measure = GridMeasure::kModulus;
  const ReportDoc doc = RunTable1(config);
  EXPECT_EQ(CsvFields(doc, 0),
            (std::vector<std::string>{"1", "1.0000", "1.0000", "1.0000",
                                      "1.0000", "1.00"}));
}

TEST(RunTable1Test, RowsFollowInputOrderForAnyWorkerCount) {
  const RunConfig config = Table1Config({3000, 100, 1000});
  const std::string one = ToCsv(RunTable1(config, 1));
  EXPECT_EQ(ToCsv(RunTable1(config, 3)), one);
  const ReportDoc doc = RunTable1(config, 2);
  EXPECT_EQ(doc.rows[0].length, 3000u);
  EXPECT_EQ(doc.rows[1].length, 100u);
  EXPECT_EQ(doc.rows[2].length, 1000u);
}

TEST(RunTable1Test, ResourceLimitNamesR) {
  RunConfig config = Table1Config({100, 100'000});
  config.max_bytes = 1'000'000;
  try {
    RunTable1(config);
    FAIL();
  } catch (const ResourceLimit& e) {
    EXPECT_NE(std::string(e.what()).find("100000"), std::string::npos)
        << e.what();
  }
}

TEST(RunTable1Test, EmptyListIsUsageError) {
  EXPECT_THROW(RunTable1(Table1Config({})), UsageError);
}

TEST(DefaultLengthsTest, Grid) {
  EXPECT_EQ(DefaultTable1Lengths(false),
            (std::vector<std::size_t>{100, 300, 1000, 3000, 10'000, 30'000,
                                      100'000, 300'000, 1'000'000,
                                      3'000'000}));
  EXPECT_EQ(DefaultTable1Lengths(true).back(), 10'000'000u);
}

TEST(RunTable2Test, FiveRowsAtSmallR) {
  RunConfig config;
  config.command = ReportKind::kTable2;
  config.length = 10'000;
  const ReportDoc doc = RunTable2(config);
  ASSERT_EQ(doc.rows.size(), 5u);
  EXPECT_EQ(doc.rows[0].label, "mobius");
  EXPECT_EQ(doc.rows[2].label, "rademacher");
  for (const Row& row : doc.rows) EXPECT_EQ(row.length, 10'000u);
  EXPECT_EQ(CsvFields(doc, 1)[2], "1.0000");  // liouville
  EXPECT_EQ(CsvFields(doc, 2)[2], "1.0000");  // random signs
  config.length = 9;
  EXPECT_THROW(RunTable2(config), UsageError);
}

TEST(RunFiguresTest, SeriesLayout) {
  RunConfig config;
  config.command = ReportKind::kFigures;
  config.lengths = {100, 1000};
  config.bars_length = 1000;
  const ReportDoc doc = RunFigures(config);
  // benchmark + 2 curve points + 1 deviation point (R >= 1000) + 5 bars
  ASSERT_EQ(doc.rows.size(), 9u);
  EXPECT_EQ(std::get<std::string>(doc.rows[0].cells[0]), "benchmark");
  EXPECT_NEAR(RealCell(doc.rows[0], 2), GaussianBenchmark(), 1e-12);
  EXPECT_EQ(std::get<std::string>(doc.rows[2].cells[0]), "fr_curve");
  EXPECT_EQ(std::get<std::string>(doc.rows[2].cells[1]), "1000");
  EXPECT_NEAR(RealCell(doc.rows[2], 2), 0.7790, 0.002);
  EXPECT_EQ(std::get<std::string>(doc.rows[3].cells[0]), "deviation_loglog");
  EXPECT_NEAR(RealCell(doc.rows[3], 2),
              std::fabs(RealCell(doc.rows[2], 2) - GaussianBenchmark()),
              1e-15);
  for (std::size_t i = 4; i < 9; ++i) {
    EXPECT_EQ(std::get<std::string>(doc.rows[i].cells[0]), "comparison_bars");
  }
  const ReportDoc back = ParseCsv(ToCsv(doc), ReportKind::kFigures);
  EXPECT_EQ(ToCsv(back), ToCsv(doc));
}

TEST(RunFiguresTest, DeviationAtOneMillion) {
  RunConfig config;
  config.command = ReportKind::kFigures;
  config.lengths = {1'000'000};
  config.bars_length = 10;
  const ReportDoc doc = RunFigures(config);
  EXPECT_NEAR(RealCell(doc.rows[2], 2), 0.0004, 0.0002);
}

TEST(RunFiguresTest, EmptyListIsUsageError) {
  RunConfig config;
  config.command = ReportKind::kFigures;
  EXPECT_THROW(RunFigures(config), UsageError);
}

RunConfig ShatterConfig() {
  RunConfig config;
  config.command = ReportKind::kShatter;
  config.length = 10;
  config.support_size = 3;
  config.trials = 64;
  config.seed = 7;
  return config;
}

TEST(RunShatterTest, EightPatternsAndVerdict) {
  const ReportDoc doc = RunShatter(ShatterConfig());
  ASSERT_EQ(doc.rows.size(), 9u);
  for (std::size_t p = 0; p < 8; ++p) {
    EXPECT_EQ(std::get<std::int64_t>(doc.rows[p].cells[0]),
              static_cast<std::int64_t>(p));
    EXPECT_EQ(std::get<std::string>(doc.rows[p].cells[1]).size(), 3u);
  }
  EXPECT_EQ(doc.rows[8].label, "verdict");
  EXPECT_EQ(CsvFields(doc, 8)[0], "verdict");
}

TEST(RunShatterTest, ThresholdAboveOneNeverShatters) {
  RunConfig config = ShatterConfig();
  config.threshold = 1.01;
  const ReportDoc doc = RunShatter(config);
  EXPECT_EQ(std::get<std::string>(doc.rows.back().cells[1]), "not_shattered");
}

TEST(RunShatterTest, FullSupportMatchesBruteForce) {
  RunConfig config;
  config.command = ReportKind::kShatter;
  config.length = 10;
  config.support = {1, 2, 3, 5, 6, 7, 10};
  config.trials = 1;
  config.measure = GridMeasure::kModulus;
  config.threshold = 0.5;
  const ReportDoc doc = RunShatter(config);
  ASSERT_EQ(doc.rows.size(), 129u);
  double worst = 1.0;
  for (std::size_t p = 0; p < 128; ++p) {
    std::vector<double> coeffs(10, 0.0);
    for (std::size_t i = 0; i < 7; ++i) {
      coeffs[config.support[i] - 1] = (p >> i) & 1 ? -1.0 : 1.0;
    }
    const double fr =
        testing::DirectL1(coeffs, 1 << 14) / std::sqrt(7.0);
    EXPECT_NEAR(RealCell(doc.rows[p], 2), fr, 1e-5) << p;
    worst = std::min(worst, fr);
  }
  const std::string expected = worst >= 0.5 ? "shattered" : "not_shattered";
  EXPECT_EQ(std::get<std::string>(doc.rows.back().cells[1]), expected);

  config.threshold = worst + 1e-3;
  EXPECT_EQ(std::get<std::string>(RunShatter(config).rows.back().cells[1]),
            "not_shattered");
  config.threshold = worst - 1e-3;
  EXPECT_EQ(std::get<std::string>(RunShatter(config).rows.back().cells[1]),
            "shattered");
}

TEST(RunNormsTest, CenteredLabelAndZeroGuard) {
  RunConfig config;
  config.command = ReportKind::kNorms;
  config.kind = "squarefree_indicator";
  config.length = 1000;
  config.center = true;
  const ReportDoc doc = RunNorms(config);
  EXPECT_EQ(doc.rows[0].label, "squarefree_indicator_centered");
  config.length = 1;
  EXPECT_THROW(RunNorms(config), UsageError);
  config.kind = "custom";
  EXPECT_THROW(RunNorms(config), UsageError);
}

TEST(ConfigTest, RoundTrip) {
  RunConfig config = ShatterConfig();
  config.format = Format::kMarkdown;
  config.measure = GridMeasure::kModulus;
  config.threshold = 0.625;
  const Json json = ConfigToJson(config);
  const RunConfig back = ConfigFromJson(json);
  EXPECT_EQ(ConfigToJson(back), json);
  // A whole JSON report works as well.
  const Json report{{"kind", "shatter"}, {"config", json}, {"rows", {}}};
  EXPECT_EQ(ConfigToJson(ConfigFromJson(report)), json);
  EXPECT_THROW(ConfigFromJson(Json{{"command", "table9"}}), UsageError);
}

// Binary-level checks.

struct Outcome {
  int exit_code;
  std::string out;
};

Outcome RunBinary(const std::string& args) {
  const std::string cmd =
      std::string("\"") + FRLAB_BINARY + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class BinaryTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("frlab_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(BinaryTest, ExitCodes) {
  EXPECT_EQ(RunBinary("").exit_code, kExitUsage);
  EXPECT_EQ(RunBinary("figures --rlist ''").exit_code, kExitUsage);
  EXPECT_EQ(RunBinary("table1 --rlist abc").exit_code, kExitUsage);
  EXPECT_EQ(RunBinary("table1 --rlist 100 --format xml").exit_code,
            kExitUsage);
  EXPECT_EQ(RunBinary("table1 --rlist 100 --oversample 1").exit_code,
            kExitUsage);
  EXPECT_EQ(RunBinary("norms --kind rademacher --R 0").exit_code, kExitUsage);
  EXPECT_EQ(RunBinary("table1 --rlist 1e6 --max-bytes 1e6").exit_code,
            kExitResource);
  const Outcome ok = RunBinary("table1 --rlist 100");
  EXPECT_EQ(ok.exit_code, kExitOk);
  EXPECT_EQ(ok.out.rfind("R,sf_density,", 0), 0u);
}

TEST_F(BinaryTest, EnvironmentCapsMemory) {
  const std::string cmd = std::string("FRLAB_MAX_BYTES=1000000 \"") +
                          FRLAB_BINARY +
                          "\" table1 --rlist 1e6 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitResource);
}

TEST_F(BinaryTest, EchoedConfigReproducesBytes) {
  const std::vector<std::string> runs = {
      "table1 --rlist 100,1000,3000",
      "--format json table2 --R 2000 --seed 11",
      "--format markdown figures --rlist 1000,100 --bars-R 500",
      "shatter --R 10 --s-size 3 --trials 8 --seed 7",
      "--measure modulus norms --kind von_mangoldt --R 500 --center",
  };
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const fs::path first = dir_ / ("first" + std::to_string(i));
    const fs::path echo = dir_ / ("echo" + std::to_string(i) + ".json");
    ASSERT_EQ(RunBinary("--parallel 1 --out " + first.string() +
                        " --echo-config " + echo.string() + " " + runs[i])
                  .exit_code,
              kExitOk)
        << runs[i];
    const std::string expected = ReadAll(first);
    ASSERT_FALSE(expected.empty());
    for (const char* workers : {"1", "3"}) {
      const Outcome again = RunBinary("--config " + echo.string() +
                                      " --parallel " + workers);
      EXPECT_EQ(again.exit_code, kExitOk);
      EXPECT_EQ(again.out, expected) << runs[i] << " workers=" << workers;
    }
  }
}

TEST_F(BinaryTest, JsonReportDoublesAsConfig) {
  const fs::path report = dir_ / "report.json";
  ASSERT_EQ(RunBinary("--format json --out " + report.string() +
                      " table1 --rlist 300")
                .exit_code,
            kExitOk);
  EXPECT_EQ(RunBinary("--config " + report.string()).out, ReadAll(report));
}

}  // namespace
}  // namespace frlab::cli
