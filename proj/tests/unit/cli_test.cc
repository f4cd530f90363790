#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

namespace cmcf::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cmcf_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  std::string Read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string Fixture(const std::string& name) {
    return std::string(CMCF_TEST_DATA_DIR) + "/" + name;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, PrepareSolveRoundTrip) {
  ASSERT_EQ(Call({"prepare", "--in", Fixture("fixture1.txt"), "--cost", "quadratic",
                  "--out", dir_.string()}),
            kOk)
      << err_.str();
  fs::path inst = dir_ / "fixture1.json";
  ASSERT_TRUE(fs::exists(inst));
  auto report = nlohmann::json::parse(Read(dir_ / "fixture1.report.json"));
  EXPECT_GT(report["tau"].get<double>(), 0.0);
  EXPECT_EQ(report["declared_links"].get<int>(), 6);

  for (const char* solver : {"inner", "tight-inner", "pattern", "bnp-tight",
                             "bnp-pattern", "greedy"}) {
    fs::path out = dir_ / solver;
    ASSERT_EQ(Call({"solve", "--instance", inst.string(), "--solver", solver, "--out",
                    out.string()}),
              kOk)
        << solver << ": " << err_.str();
    auto sol = nlohmann::json::parse(Read(out / "solution.json"));
    EXPECT_EQ(sol["solver"], solver);
    EXPECT_TRUE(sol.contains("commodities"));
    EXPECT_FALSE(sol.contains("time_s"));
    EXPECT_TRUE(fs::exists(out / "stats.json"));
  }
  // Solutions are reproducible byte for byte.
  std::string first = Read(dir_ / "bnp-pattern" / "solution.json");
  ASSERT_EQ(Call({"solve", "--instance", inst.string(), "--solver", "bnp-pattern",
                  "--out", (dir_ / "again").string()}),
            kOk);
  EXPECT_EQ(Read(dir_ / "again" / "solution.json"), first);
}

TEST_F(CliTest, BenchWritesCsvAndProfile) {
  for (const char* f : {"fixture1.txt", "fixture9.txt"}) {
    ASSERT_EQ(Call({"prepare", "--in", Fixture(f), "--out", dir_.string()}), kOk);
  }
  ASSERT_EQ(Call({"bench", "--instances", (dir_ / "fixture?.json").string(),
                  "--solvers", "inner,bnp-pattern", "--jobs", "2", "--out",
                  (dir_ / "bench").string()}),
            kOk)
      << err_.str();
  std::string csv = Read(dir_ / "bench" / "bench.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n') + 1), BenchHeader());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  std::string profile = Read(dir_ / "bench" / "profile.csv");
  EXPECT_EQ(profile.rfind("solver,time_s,fraction_solved\n", 0), 0u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Call({"solve", "--instance", "x.json"}), kInputError);
  EXPECT_EQ(Call({"solve", "--instance", (dir_ / "missing.json").string(), "--solver",
                  "inner", "--out", dir_.string()}),
            kInputError);
  EXPECT_EQ(Call({"solve", "--instance", "x", "--solver", "simplex", "--out", "y"}),
            kInputError);
  EXPECT_EQ(Call({"prepare", "--in", Fixture("nonexistent.txt"), "--out",
                  dir_.string()}),
            kInputError);
  std::ofstream(dir_ / "bad.txt") << "NODES ( a ( 0 0 ) )\nLINKS (\n";
  EXPECT_EQ(Call({"prepare", "--in", (dir_ / "bad.txt").string(), "--out",
                  dir_.string()}),
            kInputError);
  EXPECT_NE(err_.str().find("line"), std::string::npos);
  EXPECT_EQ(Call({"--help"}), kOk);
}

TEST_F(CliTest, LimitReachedExitCode) {
  ASSERT_EQ(Call({"prepare", "--in", Fixture("fixture6.txt"), "--out", dir_.string()}),
            kOk);
  EXPECT_EQ(Call({"solve", "--instance", (dir_ / "fixture6.json").string(), "--solver",
                  "flowdev", "--out", (dir_ / "fd").string()}),
            kLimitReached);
}

TEST(BenchCsv, EmptyFieldsForMissingValues) {
  BenchRow row;
  row.instance = "x";
  row.solver = "inner";
  row.bound = 1.5;
  row.has_bound = true;
  row.status = "ok";
  EXPECT_EQ(BenchCsvLine(row), "x,0,0,0,inner,1.5,,,0,0,0,ok\n");
}

}  // namespace
}  // namespace cmcf::cli
