#include "chowla/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using chowla::cli::run;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; returns exit status and stdout.
std::pair<int, std::string> shell(const std::string& args) {
  std::string cmd = std::string(CHOWLA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string text;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), text};
}

}  // namespace

TEST(Cli, XkFloatTable) {
  Outcome o = call({"xk", "--p", "5", "--k", "2", "--float"});
  ASSERT_EQ(o.code, 0);
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["rows"][0]["r"], 1);
  EXPECT_EQ(j["rows"][0]["x"].get<std::string>().rfind("0.1431083", 0), 0u);
  EXPECT_EQ(j["rows"][0]["z"]["coeffs"].size(), 4u);
}

TEST(Cli, XkCsv) {
  Outcome o = call({"xk", "--p", "5", "--k", "2", "--format", "csv", "--digits", "20"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out.rfind("r,x\n1,0.1431083", 0), 0u);
}

TEST(Cli, KernelThirteen) {
  Outcome o = call({"kernel", "--p", "13", "--k", "2"});
  ASSERT_EQ(o.code, 0);
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["bound"], 3);
  EXPECT_EQ(j["case"], "EQUALITY-PROVEN");
  EXPECT_EQ(j["basis"].size(), 3u);
}

TEST(Cli, KernelFive) {
  Json j = Json::parse(call({"kernel", "--p", "5", "--k", "2"}).out);
  EXPECT_EQ(j["basis"][0], Json::array({"1/1", "-2/1"}));
}

TEST(Cli, RankDetTraceClassnum) {
  Json rank = Json::parse(call({"rank", "--p", "13", "--k", "4"}).out);
  EXPECT_EQ(rank["qr"]["rank"], 3);
  EXPECT_EQ(rank["qr"]["status"], "PROVEN");
  Outcome det = call({"det", "--p", "7", "--k", "2", "--r", "1", "--corollary", "fcd1b"});
  ASSERT_EQ(det.code, 0);
  EXPECT_EQ(Json::parse(det.out)[0]["det_exact"], "-128/16807");
  Outcome tr = call({"trace", "--p", "7", "--k", "2"});
  ASSERT_EQ(tr.code, 0);
  EXPECT_EQ(Json::parse(tr.out)["rows"][0]["trace"], "2/7");
  Json cn = Json::parse(call({"classnum", "--p", "23"}).out);
  EXPECT_EQ(cn["h_minus"], "3");
  EXPECT_EQ(cn["h_neg_p"], "3");
}

TEST(Cli, MomentsAndLvalues) {
  Outcome m = call({"moments", "--p", "101", "--k", "1", "--m", "2"});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(Json::parse(m.out)["lhs_exact"], "3300/10201");
  Outcome odd = call({"moments", "--p", "13", "--k", "2", "--m", "3"});
  EXPECT_EQ(Json::parse(odd.out)["lhs_exact"], "0/1");
  // Misses against the asymptotic bound do not change the exit code.
  EXPECT_EQ(call({"moments", "--p", "29", "--k", "2", "--m", "2"}).code, 0);
  Outcome csv = call({"moments", "--p", "13", "--k", "1", "--m", "2", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("p,k,m,lhs,rhs_doubled,deviation,bound,pass\n13,1,2,", 0), 0u);
  Json lv = Json::parse(call({"lvalues", "--p", "7"}).out);
  EXPECT_EQ(lv["values"].size(), 5u);
  Json routes = Json::parse(call({"lvalues", "--p", "5", "--k", "2", "--f", "1,-2"}).out);
  EXPECT_EQ(routes[0]["exact_zero"], true);
  EXPECT_EQ(routes[1]["route"], "characters");
}

TEST(Cli, Series) {
  Outcome s = call({"series", "--p", "5", "--k", "2", "--r", "1"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(Json::parse(s.out)[0]["pass"], true);
  Outcome f = call({"series", "--p", "5", "--k", "2", "--f", "1,-2"});
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(Json::parse(f.out)["route"], "series");
}

TEST(Cli, InvalidInputs) {
  EXPECT_EQ(call({"xk", "--p", "9", "--k", "2"}).code, 2);
  EXPECT_EQ(call({"xk", "--p", "2"}).code, 2);
  EXPECT_EQ(call({"xk", "--p", "5", "--k", "0"}).code, 2);
  EXPECT_EQ(call({"xk", "--p", "5", "--bogus"}).code, 2);
  EXPECT_EQ(call({"xk", "--p", "5", "--digits", "10"}).code, 2);
  EXPECT_EQ(call({"xk", "--p", "5", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"xk"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"det", "--p", "13", "--k", "2", "--corollary", "fcd1b"}).code, 2);
  EXPECT_EQ(call({"det", "--p", "7", "--k", "2", "--r", "14"}).code, 2);
  EXPECT_EQ(call({"series", "--p", "5", "--k", "2", "--X", "10"}).code, 2);
  EXPECT_EQ(call({"series", "--p", "5", "--k", "2", "--f", "1"}).code, 2);
  EXPECT_EQ(call({"lvalues", "--p", "5", "--k", "2", "--f", "1/0,1"}).code, 2);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(call({"xk", "--p", "1009", "--k", "2"}).code, 2);
  EXPECT_FALSE(call({"xk", "--p", "9"}).err.empty());
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "chowla_cli_test.json";
  std::filesystem::remove(path);
  Outcome o = call({"kernel", "--p", "5", "--k", "2", "--out", path.string()});
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  Json j = Json::parse(in);
  EXPECT_EQ(j["dim"], 1);
  std::filesystem::remove(path);
}

TEST(Cli, EnvironmentPrecision) {
  setenv("CHOWLA_PRECISION_DIGITS", "25", 1);
  Json j = Json::parse(call({"xk", "--p", "5", "--k", "2", "--float"}).out);
  unsetenv("CHOWLA_PRECISION_DIGITS");
  EXPECT_EQ(j["rows"][0]["x"].get<std::string>().size(), 27u);
}

TEST(Cli, VerifyAllSmall) {
  Outcome o = call({"verify", "--suite", "all", "--pmax", "13", "--kmax", "4"});
  EXPECT_EQ(o.code, 0);
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_GT(j["checks"].size(), 100u);
}

TEST(Binary, ExitCodesAndDeterminism) {
  auto a = shell("kernel --p 13 --k 4");
  auto b = shell("kernel --p 13 --k 4");
  EXPECT_EQ(a.first, 0);
  EXPECT_EQ(a.second, b.second);
  EXPECT_EQ(shell("xk --p 15").first, 2);
  EXPECT_EQ(shell("verify --suite det --pmax 7 --kmax 3").first, 0);
  auto help = shell("--help");
  EXPECT_EQ(help.first, 0);
  EXPECT_NE(help.second.find("verify"), std::string::npos);
}
