#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "powelem/cli.hpp"

namespace powelem {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "powelem");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, PolyExamples) {
  EXPECT_EQ(run({"poly", "--d", "4", "--n", "6", "--i", "4", "--reduced=false"}).out, "e4^6\n");
  EXPECT_EQ(run({"poly", "--d", "3", "--n", "1", "--i", "2"}).out, "e2\n");
  EXPECT_EQ(run({"poly", "--d", "2", "--n", "3", "--i", "1", "--reduced"}).out, "e1^3 - 3*e1\n");
  const auto r = run({"poly", "--d", "2", "--n", "3", "--i", "1"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "e1^3 - 3*e1*e2\n");
}

TEST(Cli, PolyFormats) {
  const auto j = run({"poly", "--d", "2", "--n", "2", "--i", "1", "--format", "json"});
  ASSERT_EQ(j.code, kExitPass);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["vars"], nlohmann::json({"e1", "e2"}));
  const auto tex = run({"poly", "--d", "4", "--n", "6", "--i", "4", "--format", "latex"});
  EXPECT_EQ(tex.out, "P_{4}^{(6,4)} = e_4^{6}\n");
  EXPECT_EQ(run({"poly", "--d", "2", "--n", "2", "--i", "1", "--format", "xml"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"poly", "--d", "3", "--n", "1", "--i", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"poly", "--d", "3", "--n", "0", "--i", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"poly", "--d", "three", "--n", "1", "--i", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "identity", "--d", "1", "--n", "1", "--i", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "nonsense"}).code, kExitUsage);
  const auto r = run({"poly", "--d", "3"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyExamples) {
  const auto ok = run({"verify", "identity", "--d", "4", "--n", "6", "--i", "2"});
  EXPECT_EQ(ok.code, kExitPass);
  const auto doc = nlohmann::json::parse(ok.out);
  EXPECT_EQ(doc["check"], "identity");
  EXPECT_EQ(doc["summary"]["cases"], 1);
  const auto& report = doc["reports"][0];
  EXPECT_EQ(report["status"], "pass");
  EXPECT_EQ(report["case"]["d"], 4);
  EXPECT_TRUE(report["witness"].is_null());
  EXPECT_EQ(report["millis"], 0);

  const auto bad = run({"verify", "annulus", "--d", "2", "--n", "2", "--i", "1", "--order", "3"});
  EXPECT_EQ(bad.code, kExitFailure);
  const auto bad_doc = nlohmann::json::parse(bad.out);
  EXPECT_EQ(bad_doc["reports"][0]["status"], "fail");
  EXPECT_TRUE(bad_doc["reports"][0]["witness"].is_string());
  EXPECT_EQ(bad_doc["reports"][0]["case"]["N"], 3);
}

TEST(Cli, VerifyAllSweep) {
  const auto r = run({"verify", "all", "--max-d", "4", "--max-n", "4", "--trials", "3", "--max-order", "12"});
  EXPECT_EQ(r.code, kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_GT(doc["summary"]["cases"].get<int>(), 100);
}

TEST(Cli, TextReportAndDeterminism) {
  const std::vector<std::string> args{"verify", "oracle", "--max-d", "3", "--max-n", "3", "--trials", "2", "--seed", "9"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  auto text_args = args;
  text_args.insert(text_args.end(), {"--format", "text"});
  const auto t = run(text_args);
  EXPECT_EQ(t.out.rfind("PASS oracle d=2 n=1 i=1", 0), 0u) << t.out;
  // Thread count does not change the output.
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(run(threaded).out, a.out);
}

TEST(Cli, EmitGoldensIsByteIdentical) {
  const auto base = std::filesystem::temp_directory_path() / ("powelem_cli_test_" + std::to_string(::getpid()));
  std::filesystem::remove_all(base);
  ASSERT_EQ(run({"emit-goldens", "--out", (base / "a").string()}).code, kExitPass);
  ASSERT_EQ(run({"emit-goldens", "--out", (base / "b").string(), "--threads", "3"}).code, kExitPass);
  for (const auto* name : {"P_4_6_1.txt", "P_4_6_2.txt", "P_4_6_3.txt", "P_4_6_4.txt", "sweep_report.json"}) {
    ASSERT_TRUE(std::filesystem::exists(base / "a" / name)) << name;
    EXPECT_EQ(slurp(base / "a" / name), slurp(base / "b" / name)) << name;
  }
  EXPECT_EQ(slurp(base / "a" / "P_4_6_4.txt"), "e4^6\n");
  EXPECT_EQ(slurp(std::filesystem::path(POWELEM_GOLDEN_DIR) / "P_4_6_2.txt"), slurp(base / "a" / "P_4_6_2.txt"));
  EXPECT_TRUE(nlohmann::json::parse(slurp(base / "a" / "sweep_report.json")).is_object());

  ASSERT_EQ(run({"emit-goldens", "--out", (base / "tex").string(), "--format", "latex"}).code, kExitPass);
  const std::string display = slurp(base / "tex" / "P_4_6_display.tex");
  EXPECT_EQ(display.rfind("\\begin{align*}", 0), 0u);
  EXPECT_NE(display.find("P_{4}^{(6,4)} &= e_4^{6}."), std::string::npos) << display;

  // A regular file where the directory should go.
  std::ofstream(base / "blocker") << "x";
  EXPECT_EQ(run({"emit-goldens", "--out", (base / "blocker" / "sub").string()}).code, kExitFailure);
  std::filesystem::remove_all(base);
}

}  // namespace
}  // namespace powelem
