#include "cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace coincidence::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "coincidence");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Every computed number must read back as the value formatted at the
// requested digit count. Published values are echoed as printed.
void expect_round_trip(const nlohmann::json& node, int digits) {
  if (node.is_number_float()) {
    const double v = node.get<double>();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    EXPECT_DOUBLE_EQ(std::stod(buf), v) << node.dump();
  }
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) {
      if (key != "paper") expect_round_trip(child, digits);
    }
  } else if (node.is_array()) {
    for (const auto& child : node) expect_round_trip(child, digits);
  }
}

TEST(Cli, DefaultIsSummary) {
  const Result none = invoke({});
  const Result summary = invoke({"summary", "--n", "100", "--days", "365"});
  EXPECT_EQ(none.code, kExitOk);
  EXPECT_EQ(none.out, summary.out);
  EXPECT_NE(none.out.find("0.645865"), std::string::npos);
}

TEST(Cli, EverySubcommandEmitsParseableJson) {
  const std::vector<std::vector<std::string>> cases = {
      {"summary"},
      {"poisson"},
      {"naive"},
      {"bounds", "--kmax", "8"},
      {"doubles"},
      {"mckinney", "--n", "30", "--days", "40"},
      {"taus"},
      {"simulate", "--reps", "2000"},
      {"oracle", "--n", "12", "--days", "5", "--statistic", "max"},
      {"figure1", "--reps", "2000"}};
  for (const int digits : {4, 6, 9}) {
    for (auto args : cases) {
      args.insert(args.end(), {"--format", "json", "--digits", std::to_string(digits)});
      const Result r = invoke(args);
      ASSERT_EQ(r.code, kExitOk) << args[0] << r.err;
      const nlohmann::json doc = nlohmann::json::parse(r.out);
      EXPECT_EQ(doc["command"], args[0]);
      EXPECT_EQ(doc["digits"], digits);
      expect_round_trip(doc, digits);
    }
  }
}

TEST(Cli, GlobalFlagsMayFollowTheSubcommand) {
  const Result before = invoke({"--n", "50", "poisson", "--format", "json"});
  const Result after = invoke({"poisson", "--n", "50", "--format", "json"});
  EXPECT_EQ(before.out, after.out);
  EXPECT_EQ(nlohmann::json::parse(after.out)["params"]["n"], 50);
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--bogus"},
           {"frobnicate"},
           {"--format", "xml"},
           {"--n", "abc"},
           {"bounds", "--tol", "-1"},
           {"--digits", "0"},
           {"oracle", "--statistic", "quadruples"}}) {
    const Result r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << args[0];
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, GuardErrorsExitThree) {
  EXPECT_EQ(invoke({"oracle", "--n", "30", "--method", "exhaustive"}).code, kExitGuard);
  EXPECT_EQ(invoke({"oracle", "--n", "500"}).code, kExitGuard);
  EXPECT_EQ(invoke({"figure1", "--n", "7", "--days", "3", "--reps", "10"}).code, kExitGuard);
  EXPECT_EQ(invoke({"doubles", "--n", "7", "--days", "3"}).code, kExitOk);
}

TEST(Cli, IoErrorsExitFour) {
  const Result r = invoke({"figure1", "--reps", "100", "--out", "/nonexistent/dir/f.csv"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("/nonexistent/dir/f.csv"), std::string::npos);

  std::ostringstream sink;
  const SimSummary sim = simulate(SimConfig{10, 10, 100, 1, 1});
  EXPECT_THROW(emit_figure1(Params{10, 10}, sim, std::string("/nonexistent/f.csv")), IoError);
}

TEST(Cli, Figure1Csv) {
  const Result r = invoke({"figure1", "--reps", "20000", "--digits", "9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "k,conditional_exact,poisson,simulated");
  int previous = -1;
  double exact = 0, simulated = 0;
  while (std::getline(in, line)) {
    if (line.empty()) break;
    std::stringstream row(line);
    std::string k, c, p, s;
    std::getline(row, k, ',');
    std::getline(row, c, ',');
    std::getline(row, p, ',');
    std::getline(row, s, ',');
    EXPECT_GT(std::stoi(k), previous);
    previous = std::stoi(k);
    if (previous == 0) EXPECT_NEAR(std::stod(c), 8.676e-7, 1e-9);
    exact += std::stod(c);
    simulated += std::stod(s);
  }
  EXPECT_NEAR(exact, 1.0, 1e-6);
  EXPECT_NEAR(simulated, 1.0, 1e-6);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, Figure1ToFileMatchesStream) {
  const auto path = std::filesystem::temp_directory_path() / "coincidence_fig1_test.csv";
  const SimSummary sim = simulate(SimConfig{100, 365, 5000, 3, 1});
  std::ostringstream direct;
  emit_figure1(Params{100, 365}, sim, direct);
  emit_figure1(Params{100, 365}, sim, path.string());
  std::ifstream file(path);
  std::stringstream read;
  read << file.rdbuf();
  EXPECT_EQ(read.str(), direct.str());
  std::filesystem::remove(path);
}

TEST(Cli, SeedIsEchoedAndDeterministic) {
  const Result a = invoke({"simulate", "--reps", "5000", "--format", "json"});
  const Result b = invoke({"simulate", "--reps", "5000", "--format", "json", "--threads", "3"});
  EXPECT_EQ(a.out, b.out);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["meta"]["seed"], kDefaultSeed);
  const Result c = invoke({"simulate", "--reps", "5000", "--format", "json", "--seed", "1"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, ThreadsFromEnvironment) {
  ::setenv("COINCIDENCE_THREADS", "2", 1);
  const Result env = invoke({"simulate", "--reps", "3000", "--format", "csv"});
  ::setenv("COINCIDENCE_THREADS", "many", 1);
  const Result bad = invoke({"simulate", "--reps", "3000"});
  ::unsetenv("COINCIDENCE_THREADS");
  const Result plain = invoke({"simulate", "--reps", "3000", "--format", "csv"});
  EXPECT_EQ(env.code, kExitOk);
  EXPECT_EQ(env.out, plain.out);
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(Cli, DiscrepanciesAreLabelled) {
  const Result taus = invoke({"taus"});
  EXPECT_NE(taus.out.find("paper: 0.386"), std::string::npos) << taus.out;
  EXPECT_NE(taus.out.find("computed: 0.380881"), std::string::npos);
  const Result bounds = invoke({"bounds", "--kmax", "8"});
  EXPECT_NE(bounds.out.find("paper: 0.614"), std::string::npos) << bounds.out;
  const Result summary = invoke({"summary"});
  EXPECT_NE(summary.out.find("paper: 0.527"), std::string::npos) << summary.out;
  // Off the reference instance there is nothing to compare against.
  EXPECT_EQ(invoke({"taus", "--n", "90"}).out.find("paper:"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("figure1"), std::string::npos);
}

}  // namespace
}  // namespace coincidence::cli
