#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "cli.hpp"
#include "lininv/config.hpp"

using lininv::cli::Json;
using lininv::cli::run;

namespace {

const Json& schema() {
  static const Json doc = [] {
    std::ifstream in(LININV_CLI_SCHEMA);
    return Json::parse(in);
  }();
  return doc;
}

void expect_schema(const Json& doc) {
  std::vector<std::string> top;
  for (const auto& [key, value] : doc.items()) {
    if (key != "error") top.push_back(key);
  }
  EXPECT_EQ(top, schema()["document"].get<std::vector<std::string>>());
  const std::string command = doc["command"];
  if (doc.contains("error")) {
    const Json& spec = schema()["error"];
    for (const std::string& key : spec["required"]) EXPECT_TRUE(doc["error"].contains(key)) << key;
    std::set<std::string> types = spec["types"];
    EXPECT_TRUE(types.contains(doc["error"]["type"].get<std::string>()));
    return;
  }
  ASSERT_TRUE(schema()["commands"].contains(command)) << command;
  const Json& spec = schema()["commands"][command];
  std::set<std::string> allowed;
  for (const std::string& key : spec["required"]) {
    EXPECT_TRUE(doc["outputs"].contains(key)) << command << " lacks " << key;
    allowed.insert(key);
  }
  for (const std::string& key : spec["optional"]) allowed.insert(key);
  for (const auto& [key, value] : doc["outputs"].items()) {
    EXPECT_TRUE(allowed.contains(key)) << command << " emits unlisted " << key;
  }
}

}  // namespace

TEST(Cli, ComputeIntroExample) {
  const auto r = run({"compute", "--alpha", "4,6,7,9,11", "--pair", "1,2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.document["outputs"]["N"], -2);
  EXPECT_EQ(r.document["outputs"]["count"], 2);
  EXPECT_EQ(r.document["outputs"]["parity"], 0);
  EXPECT_EQ(r.document["exit_code"], 0);
}

TEST(Cli, ComputeSolutions) {
  const auto r = run({"compute", "--alpha", "4,6,7,9,11", "--pair", "1,2", "--solutions"});
  EXPECT_EQ(r.document["outputs"]["solutions"], Json::parse("[[1,-1,1],[1,1,-1]]"));
  EXPECT_EQ(r.document["outputs"]["coordinates"], Json::parse("[3,4,5]"));
}

TEST(Cli, VerifyEvenExample) {
  const auto r = run({"verify", "--alpha", "2,3,4,8"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.document["outputs"]["parity_invariant"], true);
  const Json& by_max = r.document["outputs"]["N_by_max_omitted"];
  EXPECT_EQ(by_max["8"], 1);
  EXPECT_EQ(by_max["4"], -1);
  EXPECT_EQ(by_max["3"], -1);
}

TEST(Cli, WeightsDimension) {
  EXPECT_EQ(run({"weights", "--m", "4"}).document["outputs"]["dimension"], 0);
  EXPECT_EQ(run({"weights", "--m", "5"}).document["outputs"]["dimension"], 1);
}

TEST(Cli, PrimesFields) {
  const auto r = run({"primes", "--n", "7", "--pair", "1,2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.document["outputs"]["N_direct"], 3);
  EXPECT_EQ(r.document["outputs"]["N_moebius"], 3);
  EXPECT_EQ(r.document["outputs"]["agree"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"compute", "--alpha", "4,x", "--pair", "1,2"}).exit_code, 2);
  EXPECT_EQ(run({"compute", "--alpha", "4,6,7"}).exit_code, 2);
  EXPECT_EQ(run({"compute", "--alpha", "4,6,7", "--pair", "1,4"}).exit_code, 3);
  EXPECT_EQ(run({"integral", "--beta", "4,6,7", "--formula", "result9"}).exit_code, 2);
  const auto degenerate = run({"compute", "--alpha", "1,2,3", "--pair", "1,2"});
  EXPECT_EQ(degenerate.exit_code, 3);
  EXPECT_EQ(degenerate.document["error"]["type"], "degenerate");
  EXPECT_EQ(degenerate.document["error"]["witness"], Json::parse("[1,1,-1]"));
  EXPECT_FALSE(degenerate.diagnostics.empty());
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, ReportsBothOrientations) {
  const auto r = run({"verify-shortening", "--alpha", "4,6,7,9,11", "--identity", "odd-signed-split", "--i", "1",
                      "--j", "5", "--k", "2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.document["outputs"]["stated_holds"], true);
  EXPECT_EQ(r.document["outputs"]["swapped_holds"], false);
}

TEST(Cli, FailedAssertionExitsFour) {
  const auto r = run({"integral", "--beta", "4,6,7,9,11", "--formula", "result", "--quadrature", "--tol", "1e-300"});
  EXPECT_EQ(r.exit_code, 4);
  EXPECT_EQ(r.document["outputs"]["quadrature"]["agree"], false);
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Cli, EveryCommandMatchesSchema) {
  const std::vector<std::vector<std::string>> invocations = {
      {"--help"},
      {"compute", "--alpha", "4,6,7,9,11", "--pair", "2,4", "--solutions"},
      {"verify", "--alpha", "4,6,7,9,11"},
      {"verify", "--alpha", "2,3,4,8"},
      {"closed-form", "--alpha", "2,3,4,8", "--pair", "1,2", "--h", "4"},
      {"closed-form", "--alpha", "4,6,7,9,11"},
      {"weights", "--m", "4"},
      {"shorten", "--alpha", "2,3,4,8", "--j", "2", "--k", "1", "--sign", "-"},
      {"verify-shortening", "--alpha", "2,3,5,9", "--identity", "count-split", "--i", "1", "--j", "3", "--k", "2"},
      {"verify-shortening", "--alpha", "4,6,7,9,11", "--identity", "odd-signed-split", "--i", "1", "--j", "5", "--k",
       "2"},
      {"integral", "--beta", "4,6,7,9,11", "--formula", "result", "--quadrature"},
      {"integral", "--beta", "2,3,4,8", "--formula", "result1", "--pair-index", "4"},
      {"approx-beta", "--alpha", "log:2,log:3,log:5"},
      {"primes", "--n", "5"},
      {"primes", "--n", "5", "--pair", "1,3", "--method", "direct"},
      {"wall-cross", "--alpha", "1,2,3", "--l", "3", "--pair", "1,2"},
      {"rademacher", "--i", "2", "--t", "1/4"},
      {"rademacher", "--beta", "1,2,3", "--x", "0.5"},
      {"compute", "--alpha", "1,2,3", "--pair", "1,2"},
      {"bogus"},
  };
  for (const auto& args : invocations) {
    SCOPED_TRACE(args.front());
    const auto r = run(args);
    expect_schema(r.document);
    EXPECT_EQ(r.document["exit_code"], r.exit_code);
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--alpha", "3,5,8,13,21,34,55,90,1/7,2/9,11/3"};
  const std::string first = run(args).document.dump(2);
  EXPECT_EQ(run(args).document.dump(2), first);
  lininv::Config cfg = lininv::config();
  cfg.threads = 4;
  lininv::ScopedConfig scoped(cfg);
  EXPECT_EQ(run(args).document.dump(2), first);
}
