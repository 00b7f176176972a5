#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "eulerspline/cli.hpp"

using eulerspline::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "eulerspline");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EulerianRowCsv) {
  const Result r = invoke({"eulerian", "row", "--d", "4", "--route", "brute", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,1\n2,11\n3,11\n4,1\n");
}

TEST(Cli, DescentTable) {
  const Result r = invoke({"descent", "table", "--d", "2", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0,1\n1,6\n2,1\n");
  const Result j = invoke({"--format", "json", "descent", "table", "--d", "2", "--n", "2", "--route", "brute"});
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["values"], nlohmann::json::parse(R"(["1","6","1"])"));
  EXPECT_EQ(doc["d"], 2);
  EXPECT_EQ(doc["n"], 2);
  EXPECT_TRUE(doc["checks"]["log_concave"].get<bool>());
  EXPECT_TRUE(doc["checks"]["conservation"].get<bool>());
}

TEST(Cli, CsvAndJsonCarrySameNumbers) {
  const Result csv = invoke({"eulerian", "row", "--d", "6"});
  const Result json = invoke({"eulerian", "row", "--d", "6", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  std::string rebuilt;
  for (std::size_t k = 0; k < doc["values"].size(); ++k) {
    rebuilt += std::to_string(k + 1) + "," + doc["values"][k].get<std::string>() + "\n";
  }
  EXPECT_EQ(csv.out, rebuilt);
}

TEST(Cli, BsplineCommands) {
  EXPECT_EQ(invoke({"bspline", "eval", "--d", "3", "--x", "3/2"}).out, "3/2,3/4\n");
  EXPECT_EQ(invoke({"bspline", "eval", "--d", "3", "--x", "3/2", "--route", "recurrence"}).out, "3/2,3/4\n");
  EXPECT_EQ(invoke({"bspline", "piece", "--d", "2", "--j", "1"}).out, "0,2\n1,-1\n");
  EXPECT_EQ(invoke({"bspline", "integrate", "--d", "3", "--a", "1", "--b", "2"}).out, "1,2,2/3\n");
  const auto doc = nlohmann::json::parse(invoke({"bspline", "eval", "--d", "4", "--x", "2", "--format", "json"}).out);
  EXPECT_EQ(doc["value"], "2/3");
}

TEST(Cli, RefinedAndPolyAndMinkowski) {
  const Result refined = invoke({"eulerian", "refined", "--d", "1", "--route", "lambda"});
  EXPECT_EQ(refined.out, "0,0,1\n0,1,0\n1,0,0\n1,1,1\n");
  EXPECT_EQ(invoke({"descent", "poly", "--d", "2", "--n", "2"}).out, "1,6,1\n");
  const auto doc = nlohmann::json::parse(invoke({"geometry", "minkowski", "--d", "2", "--k", "1", "--format", "json"}).out);
  // Coefficient j is C(2,j) times the refined entry (k=1, j).
  const auto tri = nlohmann::json::parse(invoke({"eulerian", "refined", "--d", "2", "--format", "json"}).out);
  const long binom[] = {1, 2, 1};
  for (std::size_t j = 0; j < doc["coeffs"].size(); ++j) {
    EXPECT_EQ(std::stol(doc["coeffs"][j].get<std::string>()), binom[j] * std::stol(tri["values"][1][j].get<std::string>()));
  }
}

TEST(Cli, GeometryMcIsDeterministic) {
  const std::vector<std::string> args{"geometry", "mc", "--d", "2", "--scale", "2", "--lower", "1",
                                      "--upper", "3", "--samples", "100000", "--seed", "9"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find(",100000,9"), std::string::npos);
}

TEST(Cli, VerifyAllPasses) {
  const Result a = invoke({"verify", "--all", "--d-max", "5", "--n-max", "3", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.out << a.err;
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["cases_failed"], 0);
  EXPECT_GT(doc["cases_run"].get<std::uint64_t>(), 1000U);
  EXPECT_EQ(doc["suites"].size(), 4U);
  const Result b = invoke({"verify", "--all", "--d-max", "5", "--n-max", "3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ModuleVerifyCommands) {
  EXPECT_EQ(invoke({"eulerian", "verify", "--d-max", "5"}).code, 0);
  EXPECT_EQ(invoke({"descent", "verify", "--d-max", "4", "--n-max", "3"}).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"eulerian"}).code, 2);
  EXPECT_EQ(invoke({"eulerian", "row"}).code, 2);
  EXPECT_EQ(invoke({"eulerian", "row", "--d", "3", "--route", "guess"}).code, 2);
  EXPECT_EQ(invoke({"bspline", "eval", "--d", "3", "--x", "1/0"}).code, 2);
  EXPECT_EQ(invoke({"bspline", "piece", "--d", "3", "--j", "3"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "eulerian", "row", "--d", "3"}).code, 2);
  EXPECT_EQ(invoke({"verify"}).code, 2);
  EXPECT_EQ(invoke({"geometry", "mc", "--d", "2", "--lower", "0", "--upper", "5"}).code, 2);
}

TEST(Cli, BudgetViolationExitsTwo) {
  const Result r = invoke({"--budget", "10", "descent", "table", "--d", "4", "--n", "2", "--route", "brute"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("budget 10"), std::string::npos);
  EXPECT_EQ(invoke({"eulerian", "row", "--d", "11", "--route", "brute"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eulerian"), std::string::npos);
}
