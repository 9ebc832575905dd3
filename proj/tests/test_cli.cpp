#include <gtest/gtest.h>

#include "cli_runner.hpp"
#include "parchern/scenarios.hpp"

namespace {

const std::string kCli = PARCHERN_CLI;
const std::filesystem::path kData = PARCHERN_TEST_DATA;
const std::filesystem::path kGolden = PARCHERN_GOLDEN;

clirun::Run run(const std::string& args) { return clirun::run(kCli, args); }
std::string slurp(const std::filesystem::path& p) { return clirun::slurp(p); }
std::string data(const char* name) { return clirun::quoted(kData / name); }

}  // namespace

TEST(Cli, GoldenReports) {
  for (const auto& info : parchern::listScenarios()) {
    const clirun::Run r = run("verify " + info.name + " --report json");
    EXPECT_EQ(r.exitCode, 0) << info.name;
    const auto golden = kGolden / (info.name + ".json");
    ASSERT_TRUE(std::filesystem::exists(golden)) << golden;
    EXPECT_EQ(r.out, slurp(golden)) << info.name;
  }
  EXPECT_EQ(run("verify pointed-curves --param r=7 --report json").out, slurp(kGolden / "pointed-curves.r7.json"));
  EXPECT_EQ(run("verify steenbrink-trap").out, slurp(kGolden / "steenbrink-trap.txt"));
  EXPECT_EQ(run("chern " + data("bundle_p2_pair.json") + " --model " + data("p2_user.json") + " --report json").out,
            slurp(kGolden / "chern-p2-pair.json"));
  EXPECT_EQ(run("chi " + data("family_line.json") + " --class " + data("class_minus_one.json") + " --report json").out,
            slurp(kGolden / "chi-line-minus-one.json"));
}

TEST(Cli, ByteIdenticalReruns) {
  for (const char* args : {"verify parabolic-calculus --report json", "verify steenbrink --param samples=20",
                           "verify blowup-family", "list"}) {
    const clirun::Run a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.exitCode, b.exitCode) << args;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("list").exitCode, 0);
  EXPECT_EQ(run("verify classical-rr").exitCode, 0);
  EXPECT_EQ(run("verify lefschetz-ledger --input " + data("ledger_balanced.json")).exitCode, 0);
  EXPECT_EQ(run("verify lefschetz-ledger --input " + data("ledger_unbalanced.json")).exitCode, 1);
  EXPECT_EQ(run("verify main-theorem --input " + data("degrees_weight_half.json")).exitCode, 1);
  EXPECT_EQ(run("verify chow-models --input " + data("model_noncommutative.json")).exitCode, 1);
  EXPECT_EQ(run("verify no-such-scenario").exitCode, 2);
  EXPECT_EQ(run("verify pointed-curves --param r=12").exitCode, 2);
  EXPECT_EQ(run("verify pointed-curves --param r").exitCode, 2);
  EXPECT_EQ(run("verify steenbrink --input " + data("malformed.json")).exitCode, 2);
  EXPECT_EQ(run("verify steenbrink --input " + data("complex_d_squared.json")).exitCode, 2);
  EXPECT_EQ(run("verify steenbrink --input " + data("absent.json")).exitCode, 2);
  EXPECT_EQ(run("verify classical-rr --report xml").exitCode, 2);
  EXPECT_EQ(run("verify").exitCode, 2);
  EXPECT_EQ(run("frobnicate").exitCode, 2);
  EXPECT_EQ(run("chern " + data("bundle_half_point.json") + " --model " + data("p1_user.json")).exitCode, 0);
  EXPECT_EQ(run("chern " + data("bundle_half_point.json") + " --model " + data("model_noncommutative.json")).exitCode, 2);
  EXPECT_EQ(run("chi " + data("family_inline.json") + " --class " + data("class_one.json")).exitCode, 0);
  EXPECT_EQ(run("chi " + data("family_line.json") + " --class " + data("malformed.json")).exitCode, 2);
}

TEST(Cli, TextOutputs) {
  const clirun::Run chern = run("chern " + data("bundle_half_point.json") + " --model " + data("p1_user.json"));
  EXPECT_NE(chern.out.find("chPar = 1 + 1/2*pt"), std::string::npos) << chern.out;
  const clirun::Run chi = run("chi " + data("family_line.json") + " --class " + data("class_one.json"));
  EXPECT_NE(chi.out.find("chi = 1"), std::string::npos) << chi.out;
}
