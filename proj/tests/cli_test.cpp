#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "cli_process.hpp"

namespace physkit::testing {
namespace {

std::vector<double> csv_numbers(const std::string& row) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= row.size()) {
    const std::size_t next = row.find(',', pos);
    out.push_back(std::stod(row.substr(pos, next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

TEST(CliSimulate, DrivenOscillatorRows) {
  const auto r = run_cli({"simulate", "ddho", "--beta", "0", "--amp", "1", "--omega", "0.7", "--dt",
                          "0.01", "--steps", "3"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto rows = split_lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "t,x,y,z,vx,vy,vz");
  EXPECT_EQ(rows[1], "0,1,0,0,0,0,0");
  EXPECT_TRUE(r.err.empty());
}

TEST(CliSimulate, ZeroSteps) {
  const auto r = run_cli({"simulate", "sho", "--dt", "0.01", "--steps", "0"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "t,x,y,z,vx,vy,vz\n0,1,0,0,0,0,0\n");
}

TEST(CliSimulate, SatelliteOrbitCloses) {
  const auto r = run_cli({"simulate", "satellite", "--dt", "1", "--steps", "5828"});
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = split_lines(r.out);
  ASSERT_EQ(rows.size(), 5830u);
  const auto last = csv_numbers(rows.back());
  EXPECT_LT(std::abs(std::hypot(last[1], last[2], last[3]) / 7e6 - 1), 1e-3);
}

TEST(CliSimulate, OutFileMatchesStdout) {
  const auto path = scratch_path("sim.csv");
  const auto to_file = run_cli({"simulate", "pendulum", "--steps", "20", "--out", path.string()});
  ASSERT_EQ(to_file.exit_code, 0);
  EXPECT_TRUE(to_file.out.empty());
  const auto to_stdout = run_cli({"simulate", "pendulum", "--steps", "20"});
  EXPECT_EQ(slurp(path), to_stdout.out);
  EXPECT_EQ(run_cli({"simulate", "pendulum", "--steps", "20", "--out", "-"}).out, to_stdout.out);
  std::filesystem::remove(path);
}

TEST(CliSimulate, NoFileOnError) {
  const auto path = scratch_path("bad.csv");
  const auto r = run_cli({"simulate", "sho", "--mass", "-1", "--out", path.string()});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(CliSimulate, UsageErrors) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"simulate", "warp-drive"},
           {"simulate", "sho", "--dt", "0"},
           {"simulate", "sho", "--dt", "-1"},
           {"simulate", "sho", "--dt", "abc"},
           {"simulate", "sho", "--steps", "-3"},
           {"simulate", "sho", "--method", "leapfrog"},
           {"simulate", "pendulum", "--method", "euler-cromer"},
           {"simulate", "sho", "--beta", "1"},
           {"simulate", "sho", "--bogus", "1"},
           {"simulate"},
           {"teleport"},
           {}}) {
    const auto r = run_cli(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.exit_code, 2) << joined;
    EXPECT_FALSE(r.err.empty()) << joined;
    EXPECT_TRUE(r.out.empty()) << joined;
  }
}

TEST(CliField, Examples) {
  auto r = run_cli({"field", "b-loop", "--current", "1", "--radius", "1", "--at", "0,0,0"});
  ASSERT_EQ(r.exit_code, 0);
  auto v = csv_numbers(split_lines(r.out).at(0));
  EXPECT_EQ(v[0], 0);
  EXPECT_EQ(v[1], 0);
  EXPECT_LT(std::abs(v[2] / 6.28319e-7 - 1), 1e-4);

  r = run_cli({"field", "e-line", "--lambda", "0", "--length", "1", "--at", "1,0,0"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0,0,0\n");

  r = run_cli({"field", "e-line", "--lambda", "1e-9", "--length", "1", "--at", "1,0,0"});
  ASSERT_EQ(r.exit_code, 0);
  v = csv_numbers(split_lines(r.out).at(0));
  EXPECT_NEAR(v[0], 8.0498, 1e-3);
}

TEST(CliField, Errors) {
  auto r = run_cli({"field", "e-line", "--at", "0,0,0.2"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("field point on source"), std::string::npos);
  EXPECT_EQ(run_cli({"field", "b-loop", "--at", "1,0,0"}).exit_code, 3);
  EXPECT_EQ(run_cli({"field", "b-loop", "--at", "1,0"}).exit_code, 2);
  EXPECT_EQ(run_cli({"field", "b-loop"}).exit_code, 2);
  EXPECT_EQ(run_cli({"field", "b-loop", "--lambda", "1", "--at", "0,0,1"}).exit_code, 2);
  EXPECT_EQ(run_cli({"field", "e-loop", "--at", "0,0,1"}).exit_code, 2);
  EXPECT_EQ(run_cli({"field", "b-loop", "--intervals", "0", "--at", "0,0,1"}).exit_code, 2);
}

TEST(CliGrid, WritesAllPointsOrNothing) {
  const auto path = scratch_path("grid.csv");
  auto r = run_cli({"grid", "b-loop", "--x", "-0.5,0.5,3", "--y", "0,0,1", "--z", "0,1,2", "--out",
                    path.string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto rows = split_lines(slurp(path));
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "x,y,z,Fx,Fy,Fz");
  EXPECT_EQ(rows[1].rfind("-0.5,0,0,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("-0.5,0,1,", 0), 0u);
  EXPECT_EQ(rows[6].rfind("0.5,0,1,", 0), 0u);
  std::filesystem::remove(path);

  r = run_cli({"grid", "b-loop", "--x", "0,1,3", "--y", "0,0,1", "--z", "0,0,1", "--out",
               path.string()});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("1,0,0"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(CliScenarios, ListsEveryScenario) {
  const auto r = run_cli({"scenarios"});
  ASSERT_EQ(r.exit_code, 0);
  for (const char* name : {"sho", "ddho", "satellite", "pendulum", "three-body", "spring-chain"}) {
    EXPECT_NE(r.out.find(std::string(name) + " ("), std::string::npos) << name;
  }
}

TEST(CliHelp, ExitsZero) {
  EXPECT_EQ(run_cli({"--help"}).exit_code, 0);
  EXPECT_EQ(run_cli({"simulate", "--help"}).exit_code, 0);
}

}  // namespace
}  // namespace physkit::testing
