#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

#include "cli.hpp"
#include "support/generators.hpp"

namespace monideal {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTriangle = "(x1*x2, x1*x3, x2*x3)";

TEST(Cli, DecomposeTriangle) {
  const Outcome r = invoke({"decompose", kTriangle});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "(x1, x2) /\\ (x1, x3) /\\ (x2, x3)\n");
}

TEST(Cli, EqPowersTriangleRow) {
  const Outcome r = invoke({"eq-powers", kTriangle, "--k", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "k | equal | ass_condition | normal_at_k");
  EXPECT_EQ(row.rfind("2 | false | ", 0), 0U) << row;
}

TEST(Cli, RadicalExample) {
  const Outcome r = invoke({"radical", "(x1^3*x2, x2^2)"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "(x2)\n");
}

TEST(Cli, OtherVerbs) {
  EXPECT_EQ(invoke({"closure", "(x1^2, x2^2)"}).out, "(x1^2, x1*x2, x2^2)\n");
  EXPECT_EQ(invoke({"member", "(x1*x2)", "x1^2*x2"}).out, "true\n");
  EXPECT_EQ(invoke({"member", "(x1*x2)", "x1^2"}).out, "false\n");
  EXPECT_EQ(invoke({"power", "(x1, x2)", "--k", "2"}).out, "(x1^2, x1*x2, x2^2)\n");
  EXPECT_EQ(invoke({"irreducible", "(x1^2, x2)"}).out, "true\n");
  EXPECT_EQ(invoke({"irreducible", "(x1*x2)"}).out, "false\n");
  EXPECT_EQ(invoke({"decompose", kTriangle, "--unicode"}).out,
            "(x1, x2) ∩ (x1, x3) ∩ (x2, x3)\n");
  EXPECT_EQ(invoke({"decompose", "(x2)", "--dim", "3"}).code, cli::kOk);
  for (const std::string& verb : cli::verbs()) {
    std::vector<std::string> args{verb, "(x1*x2, x2*x3)"};
    if (verb == "member") args.push_back("x2");
    if (verb == "power" || verb == "symbolic" || verb == "eq-powers") {
      args.insert(args.end(), {"--k", "2"});
    }
    if (verb == "normal") args.insert(args.end(), {"--K", "2"});
    args.push_back("--verify");
    const Outcome r = invoke(args);
    EXPECT_EQ(r.code, cli::kOk) << verb << ": " << r.err;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"decompose", "(1)"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"decompose", "(x0)"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"decompose", "(x3)", "--dim", "2"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"frobnicate", "(x1)"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"power", "(x1)"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"power", "(x1)", "--k", "0"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"eq-powers", "(x1)", "--k", "1", "--K", "2"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"decompose", "(0)"}).code, cli::kDomainError);
  EXPECT_EQ(invoke({"eq-powers", "(x1^2, x2)", "--K", "2"}).code, cli::kDomainError);
  const Outcome bad = invoke({"decompose", "(x1, 1)"});
  EXPECT_NE(bad.err.find("ideal must be proper"), std::string::npos);
}

TEST(Cli, ReadsStdin) {
  const Outcome r = invoke({"decompose", "-"}, kTriangle + "\n");
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, invoke({"decompose", kTriangle}).out);
}

TEST(Cli, JsonShape) {
  const Outcome r = invoke({"decompose", kTriangle, "--json"});
  ASSERT_EQ(r.code, cli::kOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "monideal-output/v1");
  EXPECT_EQ(j.at("verb"), "decompose");
  ASSERT_EQ(j.at("components").size(), 3U);
  EXPECT_EQ(j["components"][0]["indices"], nlohmann::json({1, 2}));
  EXPECT_EQ(j["components"][0]["exponents"], nlohmann::json({1, 1}));

  const nlohmann::json m = nlohmann::json::parse(invoke({"minass", kTriangle, "--json"}).out);
  EXPECT_FALSE(m.dump().empty());
}

TEST(Cli, Deterministic) {
  testing::Rng rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    const std::string text = to_string(testing::random_ideal_upto(rng, 4, 4, 3));
    for (const char* verb : {"decompose", "ass", "radical"}) {
      const Outcome a = invoke({verb, text, "--json"});
      const Outcome b = invoke({verb, text, "--json"});
      EXPECT_EQ(a.out, b.out);
      EXPECT_EQ(invoke({verb, text}).out, invoke({verb, text}).out);
    }
  }
}

}  // namespace
}  // namespace monideal
