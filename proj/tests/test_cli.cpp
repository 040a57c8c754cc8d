#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pidft/cli.hpp"
#include "pidft/csv.hpp"

namespace pidft {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pidft");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(NSpec, RangesListsAndErrors) {
  EXPECT_EQ(parse_n_spec("8"), (std::vector<std::int64_t>{8}));
  EXPECT_EQ(parse_n_spec("1..4,8"), (std::vector<std::int64_t>{1, 2, 3, 4, 8}));
  EXPECT_EQ(parse_n_spec("16, 4,4,2"), (std::vector<std::int64_t>{2, 4, 16}));
  for (const char* bad : {"0", "3..1", "a", "1,,2", "513", "2..600", "-1", ""}) {
    EXPECT_THROW(parse_n_spec(bad), UsageError) << bad;
  }
}

TEST(Csv, FormattingAndQuoting) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::ostringstream out;
  CsvWriter w(out, "pidft x", {"a", "b"});
  w.row({"1", "x,y"});
  EXPECT_EQ(out.str(), "# cmd: pidft x\na,b\n1,\"x,y\"\n");
}

TEST(Cli, ChartableZ4) {
  const auto r = invoke({"chartable", "--group", "z4"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 18u);
  EXPECT_EQ(lines[0], "# cmd: pidft chartable --group z4");
  EXPECT_EQ(lines[1], "label,element,re,im");
  EXPECT_EQ(lines[2], "0,0,1,0");
  EXPECT_EQ(lines[7], "1,1,0,1");
}

TEST(Cli, ChartableScaledGroupLabels) {
  const auto r = invoke({"chartable", "--group", "g4_2"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 66u);
  EXPECT_EQ(lines[2].substr(0, 6), "-2,-2,");
  EXPECT_EQ(lines[3].substr(0, 8), "-2,-3/2,");
}

TEST(Cli, DftAndInvert) {
  const auto d = invoke({"dft", "--n", "1", "--fn", "gaussian"});
  ASSERT_EQ(d.code, kExitPass) << d.err;
  const auto lines = lines_of(d.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[1], "t,re,im");
  EXPECT_EQ(lines[2].substr(0, 3), "-1,");

  const auto fast = invoke({"dft", "--n", "3", "--method", "fast"});
  const auto naive = invoke({"dft", "--n", "3", "--method", "naive"});
  EXPECT_EQ(lines_of(fast.out).size(), lines_of(naive.out).size());

  const auto inv = invoke({"invert", "--n", "4", "--fn", "gauss_ihermite1"});
  EXPECT_EQ(inv.code, kExitPass) << inv.err;
  EXPECT_EQ(lines_of(inv.out)[1], "x,re,im");
  EXPECT_EQ(lines_of(inv.out).size(), 34u);
}

TEST(Cli, VerifyInversionSuite) {
  const auto r = invoke({"verify", "--suite", "inversion", "--n", "1..6", "--seed", "7"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto lines = lines_of(r.out);
  EXPECT_EQ(lines[1], "function,n,metric,value,bound,pass");
  EXPECT_EQ(lines.size(), 2u + 12u);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    EXPECT_EQ(lines[i].substr(lines[i].size() - 5), ",true");
  }
}

TEST(Cli, SameConfigurationSameBytes) {
  const std::vector<std::string> args = {"verify", "--suite", "oracle", "--n", "1..4",
                                         "--seed", "3", "--threads", "3"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  auto other = args;
  other[6] = "4";
  EXPECT_NE(invoke(other).out, a.out);
}

TEST(Cli, BoundsAndConvergeReports) {
  const auto b = invoke({"bounds", "--fn", "hermite1", "--n", "2,4", "--eps", "0.5"});
  ASSERT_EQ(b.code, kExitPass) << b.err;
  EXPECT_EQ(lines_of(b.out)[1], "function,n,quantity,measured,bound,pass");

  const auto c = invoke({"converge", "--fn", "gaussian", "--n", "4,8"});
  ASSERT_EQ(c.code, kExitPass) << c.err;
  EXPECT_NE(c.out.find("gaussian,8,spectrum_error_t=0,2.974655210080668"), std::string::npos);
}

TEST(Cli, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "pidft_cli_test.csv";
  const auto r = invoke({"chartable", "--group", "g2", "--out", path.string()});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("# cmd: pidft chartable --group g2 --out ", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  const std::vector<std::vector<std::string>> cases = {
      {},
      {"nosuch"},
      {"dft"},
      {"dft", "--n", "2,4"},
      {"dft", "--fn", "nosuch", "--n", "2"},
      {"dft", "--n", "2", "--n-list", "2"},
      {"verify", "--suite", "nosuch"},
      {"chartable"},
      {"chartable", "--group", "g3"},
      {"chartable", "--group", "z4", "--out", "/nonexistent/dir/x.csv"},
      {"bounds", "--n", "1"},
      {"converge", "--eps", "0"},
      {"verify", "--threads", "0"},
      {"dft", "--n", "2", "--group", "z4"},
  };
  for (const auto& args : cases) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << testing::PrintToString(args);
    const auto summary = nlohmann::json::parse(r.err);
    EXPECT_EQ(summary["status"], "usage_error");
  }
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, NonConvergenceExitCode) {
  const auto r = invoke({"converge", "--fn", "gaussian", "--n", "4,8", "--max-bits", "160"});
  EXPECT_EQ(r.code, kExitNonConvergence);
  EXPECT_EQ(nlohmann::json::parse(r.err)["status"], "non_convergence");
}

TEST(Cli, RunWithoutParsing) {
  RunConfig config;
  config.command = Command::Bounds;
  config.n_list = {2};
  config.command_line = "pidft bounds --n 2";
  std::ostringstream out, err;
  EXPECT_EQ(run(config, out, err), kExitPass);
  EXPECT_EQ(out.str().rfind("# cmd: pidft bounds --n 2\n", 0), 0u);
}

}  // namespace
}  // namespace pidft
