#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cantor/number_field.hpp"
#include "cli.hpp"

namespace cantor::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, SolusMomentsAsJson) {
  const Result r = run({"moments", "--kind", "solus", "--theta", "1/3", "--n", "10", "--digits", "12",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "moments");
  EXPECT_EQ(j["parameters"]["kind"], "solus");
  const auto& mu1 = j["rows"][1];
  EXPECT_EQ(mu1["index"], 1);
  EXPECT_NEAR(std::stod(mu1["decimal"].get<std::string>()), 0.338826, 1e-6);
  EXPECT_EQ(QuadElement::parse(mu1["exact"].get<std::string>()).to_string(), mu1["exact"]);
  EXPECT_EQ(j["metadata"]["seed"], 0);
}

TEST(Cli, MinimumConstant) {
  const Result r = run({"constants", "--name", "cantor-min", "--digits", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"quantity", "index", "exact", "decimal", "error_bound"}));
  EXPECT_EQ(rows[1][3], "1.9967049717");
}

TEST(Cli, VerifyOracleSuite) {
  const Result r = run({"verify", "--suite", "oracle", "--max-len", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find(",fail,"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"nonsense"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"moments", "--theta", "0.3"}).code, kUsage);
  EXPECT_EQ(run({"moments", "--theta", "2/3"}).code, kUsage);
  EXPECT_EQ(run({"moments", "--theta", "1/0"}).code, kUsage);
  EXPECT_EQ(run({"runs", "--kind", "solus", "--bit", "1"}).code, kUsage);
  EXPECT_EQ(run({"enumerate", "--n", "40"}).code, kInfeasible);
  EXPECT_EQ(run({"enumerate", "--n", "9", "--max-len", "8"}).code, kInfeasible);
  EXPECT_EQ(run({"moments", "--help"}).code, kOk);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> invocations = {
      {"sample", "--kind", "multus", "--n", "64", "--count", "5", "--seed", "9"},
      {"order-stats", "--kind", "solus", "--n", "3", "--monte-carlo", "--samples", "2000", "--seed", "3"},
      {"runs", "--kind", "multus", "--bit", "0", "--n", "12", "--format", "json"}};
  for (const auto& args : invocations) {
    const Result a = run(args);
    const Result b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_NE(run({"sample", "--n", "64", "--seed", "1"}).out, run({"sample", "--n", "64", "--seed", "2"}).out);
}

TEST(Cli, EverySubcommandRuns) {
  const std::vector<std::vector<std::string>> invocations = {
      {"moments", "--kind", "multus", "--n", "3"},
      {"moments", "--kind", "solus", "--length", "6", "--method", "enumeration", "--n", "2"},
      {"moments", "--float", "--n", "50"},
      {"order-stats", "--n", "5"},
      {"order-stats", "--kind", "solus", "--float", "--n", "30"},
      {"order-stats", "--kind", "solus", "--window", "20", "40"},
      {"bitsums", "--kind", "solus", "--n", "6"},
      {"bitsums", "--kind", "multus", "--limit"},
      {"bitsums", "--kind", "multus", "--length", "7"},
      {"runs", "--n", "8"},
      {"runs", "--kind", "multus", "--bit", "1", "--no-run", "3", "--n", "8"},
      {"runs", "--kind", "solus", "--bit", "0", "--length", "9"},
      {"constants", "--name", "gamma", "--s", "1/2", "--digits", "20"},
      {"constants", "--name", "zeta", "--s", "3"},
      {"constants", "--name", "run-asymptotic", "--n", "4096"},
      {"constants", "--name", "psi"},
      {"enumerate", "--kind", "multus", "--n", "5"},
      {"fib-word", "--n", "50", "--show-prefix"},
      {"verify", "--suite", "counts"}};
  for (const auto& args : invocations) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_GT(csv_rows(r.out).size(), 1U) << args[0];
  }
}

TEST(Cli, ExactStringsRoundTrip) {
  const Result r = run({"bitsums", "--kind", "multus", "--limit"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(CubicElement::parse(rows[i][2]).to_string(), rows[i][2]);
  }
  const Result e = run({"enumerate", "--kind", "solus", "--n", "4"});
  EXPECT_EQ(csv_rows(e.out).size(), 9U);  // header + f_6 = 8 members
}

TEST(Cli, CsvEscapesEmbeddedCommas) {
  OutputRecord rec;
  rec.command = "x";
  rec.rows.push_back({"a,b", 1, "q\"r", "0.5", "0"});
  EXPECT_EQ(to_csv(rec), "quantity,index,exact,decimal,error_bound\n\"a,b\",1,\"q\"\"r\",0.5,0\n");
}

}  // namespace
}  // namespace cantor::cli
