#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "idcert/io/cli.hpp"
#include "json.hpp"

using namespace idcert;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string random_doc(const std::string& sizes, const std::string& degrees, int h, int seed,
                       const std::string& emit = "tensor") {
  const auto r = run({"random", "--sizes", sizes, "--degrees", degrees, "--h", std::to_string(h), "--seed",
                      std::to_string(seed), "--emit", emit});
  EXPECT_EQ(r.code, 0) << r.err;
  return r.out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "idcert_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, RankSevenQuinticUsesEmptySection) {
  const auto r = run({"certify", "-"}, random_doc("3", "5", 7, 1));
  EXPECT_EQ(r.code, cli::kExitCertified) << r.err;
  EXPECT_TRUE(contains(r.out, "Theorem 3.7"));
  EXPECT_TRUE(contains(r.out, "7-identifiability certified"));
}

TEST(Cli, EightSexticsUseDecompositionCriterion) {
  const auto r = run({"certify", "-"}, random_doc("3", "6", 8, 1, "decomposition"));
  EXPECT_EQ(r.code, cli::kExitCertified) << r.err;
  EXPECT_TRUE(contains(r.out, "Proposition 3.3"));
}

TEST(Cli, InconclusiveExitCode) {
  const auto r = run({"certify", "-"}, random_doc("3", "4", 5, 1));
  EXPECT_EQ(r.code, cli::kExitInconclusive);
  EXPECT_TRUE(contains(r.out, "Inconclusive"));
}

TEST(Cli, UsageErrors) {
  const std::string doc = random_doc("3", "5", 6, 1);
  auto r = run({"certify", "--h", "0", "-"}, doc);
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_TRUE(contains(r.err, "error:"));
  EXPECT_EQ(run({"certify", "-"}, "sizes 3\ndegrees 5\npolynomial x1_0^5 + x4_0^5\n").code, cli::kExitError);
  EXPECT_EQ(run({"certify", "/nonexistent/file"}).code, cli::kExitError);
  EXPECT_EQ(run({"certify", "--field", "fp:12", "-"}, doc).code, cli::kExitError);
  EXPECT_EQ(run({"certify", "--report", "xml", "-"}, doc).code, cli::kExitError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitError);
  EXPECT_EQ(run({"certify", "--criterion", "prop33", "-"}, doc).code, cli::kExitError);
  // no h anywhere
  EXPECT_EQ(run({"certify", "-"}, "sizes 2\ndegrees 3\npolynomial x1_0^3\n").code, cli::kExitError);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "certify"));
}

TEST(Cli, JsonReport) {
  const auto r = run({"certify", "--report", "json", "-"}, random_doc("3", "5", 6, 2));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["criterion"], "prop31");
  EXPECT_EQ(j["verdict"], "Certified");
  EXPECT_EQ(j["input"]["h"], 6);
}

TEST(Cli, HOverrideAndSplit) {
  const std::string doc = random_doc("3", "5", 6, 3);
  auto r = run({"certify", "--h", "7", "--criterion", "prop31", "-"}, doc);
  EXPECT_EQ(r.code, cli::kExitInconclusive);
  r = run({"certify", "--split", "3", "--report", "json", "-"}, doc);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["input"]["split"]["a"], nlohmann::json::array({3}));
}

TEST(Cli, FieldPrecedence) {
  const std::string doc = random_doc("3", "5", 6, 4);
  auto field_of = [](const Result& r) { return nlohmann::json::parse(r.out)["field"]["name"].get<std::string>(); };
  EXPECT_EQ(field_of(run({"certify", "--report", "json", "-"}, doc)), "qq");
  ::setenv("IDCERT_FIELD", "fp:1000003", 1);
  EXPECT_EQ(field_of(run({"certify", "--report", "json", "-"}, doc)), "fp:1000003");
  EXPECT_EQ(field_of(run({"certify", "--report", "json", "-"}, "field fp:65521\n" + doc)), "fp:65521");
  EXPECT_EQ(field_of(run({"certify", "--field", "qq", "--report", "json", "-"}, "field fp:65521\n" + doc)), "qq");
  ::unsetenv("IDCERT_FIELD");
  ::setenv("IDCERT_BUDGET", "garbage", 1);
  EXPECT_EQ(run({"certify", "-"}, doc).code, cli::kExitError);
  ::unsetenv("IDCERT_BUDGET");
}

TEST(Cli, BudgetExhaustionIsInconclusive) {
  const auto r = run({"certify", "--budget", "1", "--report", "json", "-"}, random_doc("2,5,4", "3,2,3", 5, 1));
  EXPECT_EQ(r.code, cli::kExitInconclusive);
}

TEST(Cli, ParallelFiles) {
  std::vector<std::string> args{"certify", "--jobs", "4"};
  for (int seed = 0; seed < 6; ++seed)
    args.push_back(temp_file("in" + std::to_string(seed) + ".txt", random_doc("3", "5", 6, seed)).string());
  const auto par = run(args);
  EXPECT_EQ(par.code, 0) << par.err;
  args[2] = "1";
  const auto seq = run(args);
  // same order, same content apart from timings
  EXPECT_EQ(std::count(par.out.begin(), par.out.end(), '\n'), std::count(seq.out.begin(), seq.out.end(), '\n'));
  EXPECT_LT(par.out.find("in0.txt"), par.out.find("in5.txt"));
  args.push_back(temp_file("bad.txt", "sizes 3\n").string());
  EXPECT_EQ(run(args).code, cli::kExitError);
}

TEST(Cli, RandomIsDeterministic) {
  EXPECT_EQ(random_doc("2,3", "2,2", 3, 9), random_doc("2,3", "2,2", 3, 9));
  EXPECT_NE(random_doc("2,3", "2,2", 3, 9), random_doc("2,3", "2,2", 3, 10));
  EXPECT_EQ(run({"random", "--sizes", "3", "--degrees", "5", "--h", "2", "--bound", "1"}).code, cli::kExitError);
}

TEST(Cli, Bounds) {
  auto r = run({"bounds", "--family", "mixed-symmetric", "3", "4", "4", "--h", "30"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "bound: h < 32"));
  EXPECT_EQ(run({"bounds", "--family", "mixed-symmetric", "3", "4", "4", "--h", "32"}).code, cli::kExitInconclusive);
  EXPECT_EQ(run({"bounds", "--family", "segre", "3", "4", "--h", "4"}).code, 0);  // 9 - 2*2 = 5
  EXPECT_EQ(run({"bounds", "--family", "segre", "3", "4", "--h", "5"}).code, cli::kExitInconclusive);
  EXPECT_EQ(run({"bounds", "--sizes", "3", "--degrees", "5", "--h", "6"}).code, 0);
  EXPECT_EQ(run({"bounds", "--sizes", "3", "--degrees", "4", "--h", "5"}).code, cli::kExitInconclusive);
  EXPECT_EQ(run({"bounds", "--family", "nope", "3", "--h", "1"}).code, cli::kExitError);
}
