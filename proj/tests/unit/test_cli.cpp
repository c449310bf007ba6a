#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "berndt_cli/cli.hpp"

namespace berndt::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "berndt");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Invocation& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, TablesAlpha) {
  const Invocation r = invoke({"tables", "--what", "alpha"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["command"], "tables");
  ASSERT_GE(j["alpha"].size(), 1u);
  EXPECT_EQ(j["alpha"][0]["k"], 2);
  EXPECT_EQ(j["alpha"][0]["value"], "1/1536");
}

TEST(Cli, SumWithNumericCheck) {
  const Invocation r = invoke({"--prec", "128", "sum", "--family", "sinh2", "--exp", "0", "--numeric"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["family"], "SINH2");
  EXPECT_EQ(j["closed_form_text"], "-1/2*pi^-1 + 1/6");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["prec"], 128);
  EXPECT_EQ(j["decimal"].get<std::string>().substr(0, 12), "7.5117235747");
}

TEST(Cli, IntegralReportsQuadratureFields) {
  const Invocation r = invoke({"--prec", "96", "integral", "--kind", "minus2", "--p", "1", "--numeric"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["a"], 5);
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j.contains("tail_bound"));
  EXPECT_TRUE(j.contains("error_estimate"));
}

TEST(Cli, RelationsAndConjecture) {
  const Invocation rel = invoke({"--prec", "96", "relations", "--which", "thm42", "--a", "1"});
  ASSERT_EQ(rel.code, kExitOk) << rel.err;
  EXPECT_EQ(parse(rel)["pass"], true);
  const Invocation conj = invoke({"conjecture", "--pmax", "3"});
  ASSERT_EQ(conj.code, kExitOk) << conj.err;
  const auto j = parse(conj);
  EXPECT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(j["failures"], 0);
}

TEST(Cli, InvalidInputsExitTwo) {
  EXPECT_EQ(invoke({"sum", "--family", "sinh2", "--exp", "3"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"sum", "--family", "nonsense", "--exp", "2"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"--prec", "10", "tables"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"integral", "--kind", "minus2", "--p", "0"}).code, kExitInvalid);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInvalid);
  EXPECT_EQ(invoke({}).code, kExitInvalid);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

TEST(Cli, TextFormatWalksTheReport) {
  const Invocation r = invoke({"--format", "text", "sum", "--family", "cosh2", "--exp", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("command: sum"), std::string::npos);
  EXPECT_NE(r.out.find("closed_form_text: 1/192*G^8*pi^-6"), std::string::npos) << r.out;
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"tables", "--what", "all", "--mmax", "3", "--pmax", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, VerifyAllPasses) {
  const Invocation r = invoke({"verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["failed"], 0);
  for (const auto& e : j["entries"]) {
    EXPECT_NE(e["status"], "fail") << e["identity_id"];
    EXPECT_FALSE(e.contains("runtime_ms"));
  }
}

TEST(Cli, SuiteRunnerReportsFailures) {
  std::vector<SuiteItem> items = {
      {"ok", "", [](const SuiteOptions&) { return std::pair{Status::ExactPass, std::string("0")}; }},
      {"bad", "", [](const SuiteOptions&) { return std::pair{Status::Fail, std::string("1")}; }},
  };
  const auto results = run_suite(items, SuiteOptions{}, nullptr);
  ASSERT_EQ(results.size(), 2u);
  EXPECT_EQ(results[0].status, Status::ExactPass);
  EXPECT_EQ(results[1].status, Status::Fail);
  EXPECT_STREQ(status_name(results[1].status), "fail");
}

}  // namespace
}  // namespace berndt::cli
