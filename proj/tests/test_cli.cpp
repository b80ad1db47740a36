#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Run {
  int exit_code;
  std::string output;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QDISCORD_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::map<std::string, double> fields(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) out[line.substr(0, eq)] = std::stod(line.substr(eq + 3));
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qdiscord_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(Cli, PointWithoutDampingHasNoDiscord) {
  const auto r = run("point --lambda 0.5 --gamma 0 --p 1");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto f = fields(r.output);
  EXPECT_EQ(f.at("D_entropic"), 0.0);
  EXPECT_EQ(f.at("D_geometric"), 0.0);
}

TEST_F(Cli, PointReportsCoefficientsAndGeometricDiscord) {
  const auto r = run("point --lambda 0.5 --gamma 0.5 --p 1");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("T13 = 0.707106781187\n"), std::string::npos) << r.output;
  const auto f = fields(r.output);
  EXPECT_EQ(f.at("x3"), 0.5);
  EXPECT_EQ(f.at("T33"), 0.0);
  EXPECT_NEAR(f.at("D_geometric"), 0.0625, 1e-12);
  EXPECT_GT(f.at("D_entropic"), 0.0);
  for (const char* key : {"lambda", "gamma", "p", "theta_star", "S_A", "S_AB"})
    EXPECT_TRUE(f.count(key)) << key;
}

TEST_F(Cli, PointAtLambdaZeroHasNoDiscord) {
  const auto r = run("point --lambda 0 --gamma 0.3 --p 0.7");
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_LE(fields(r.output).at("D_entropic"), 1e-8);
}

TEST_F(Cli, PointRejectsOutOfRangeParameter) {
  const auto r = run("point --lambda 0.5 --gamma 1.5 --p 1");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("gamma"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("point --lambda 0.5").exit_code, 2);
  EXPECT_EQ(run("sweep --preset fig3").exit_code, 2);
  EXPECT_EQ(run("sweep --axis1 lambda:0:1").exit_code, 2);
  EXPECT_EQ(run("sweep --axis1 lambda:0:2:3 --fixed gamma=0.5 --fixed p=1").exit_code, 2);
  EXPECT_EQ(run("sweep --axis1 lambda:0:1:3 --fixed gamma=0.5").exit_code, 2);
  EXPECT_EQ(run("verify --oracle-res 10").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(Cli, CustomSweepOnDampingBoundaryIsZero) {
  const fs::path csv = dir_ / "edge.csv";
  const auto r = run("sweep --axis1 gamma:0:1:2 --axis2 lambda:0.2:0.6:2 --fixed p=0.9 --image --out " +
                     csv.string());
  ASSERT_EQ(r.exit_code, 0) << r.output;
  std::stringstream ss(slurp(csv));
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "lambda,gamma,p,discord_entropic,discord_geometric,theta_star");
  int rows = 0;
  while (std::getline(ss, line)) {
    ++rows;
    std::stringstream cells(line);
    std::string v[6];
    for (auto& x : v) std::getline(cells, x, ',');
    EXPECT_LE(std::stod(v[3]), 1e-8) << line;
    EXPECT_LE(std::stod(v[4]), 1e-12) << line;
  }
  EXPECT_EQ(rows, 4);
  const std::string pgm = slurp(dir_ / "edge.pgm");
  EXPECT_EQ(pgm, std::string("P5\n2 2\n255\n") + std::string(4, '\xff'));
}

TEST_F(Cli, SweepOutputIsDeterministic) {
  const std::string args = "sweep --axis1 lambda:0:1:9 --axis2 gamma:0:1:7 --fixed p=0.8 --out ";
  ASSERT_EQ(run(args + (dir_ / "a.csv").string()).exit_code, 0);
  ASSERT_EQ(run(args + (dir_ / "b.csv").string()).exit_code, 0);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
}

TEST_F(Cli, PresetsWriteExpectedFiles) {
  ASSERT_EQ(run("sweep --preset fig1 --res 5 --image --out " + dir_.string()).exit_code, 0);
  for (const char* p : {"1", "0.8", "0.6", "0.55"}) {
    EXPECT_TRUE(fs::exists(dir_ / (std::string("fig1_p") + p + ".csv"))) << p;
    EXPECT_TRUE(fs::exists(dir_ / (std::string("fig1_p") + p + ".pgm"))) << p;
  }
  ASSERT_EQ(run("sweep --preset fig2 --res 5 --out " + dir_.string()).exit_code, 0);
  const std::string csv = slurp(dir_ / "fig2_lambda0.5.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 26);
}

TEST_F(Cli, UnwritableOutputExitsWithThree) {
  const fs::path blocker = dir_ / "file";
  std::ofstream(blocker) << "x";
  EXPECT_EQ(run("sweep --preset fig2 --res 3 --out " + (blocker / "sub").string()).exit_code, 3);
  EXPECT_EQ(run("sweep --axis1 p:0:1:2 --fixed lambda=0.5 --fixed gamma=0.5 --out " +
                (blocker / "x.csv").string())
                .exit_code,
            3);
}

TEST_F(Cli, VerifyExitCodeTracksResultsAndTamperedToleranceFails) {
  const auto ok = run("verify --oracle-res 64 --oracle-points 2");
  const bool any_fail = ok.output.find("FAIL") != std::string::npos;
  EXPECT_EQ(ok.exit_code, any_fail ? 1 : 0) << ok.output;
  EXPECT_NE(ok.output.find("PASS"), std::string::npos);

  const auto bad = run("verify --oracle-res 64 --oracle-points 2 --tolerance-scale 0");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.output.find("FAIL"), std::string::npos);
}

}  // namespace
