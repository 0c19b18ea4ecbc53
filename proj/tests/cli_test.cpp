// Copyright 2026 The tpcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tpcalc/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtest/gtest.h"

namespace tpcalc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tpcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string example(const char* name) {
  return (std::filesystem::path(TPCALC_DIAGRAMS_DIR) / name).string();
}

TEST(Cli, EvalCoin) {
  const Result r = invoke({"--semiring", "qnn", "eval", example("proba_coin.tpc")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("2/3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1/3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("fragment full"), std::string::npos) << r.out;
}

TEST(Cli, EvalJson) {
  const Result r =
      invoke({"--semiring", "qr2", "--format", "json", "eval", example("hadamard_plus.tpc")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["semiring"], "qr2");
  EXPECT_EQ(j["rows"], 3);
  EXPECT_EQ(j["entries"][0][0], "1");
  EXPECT_EQ(j["entries"][1][0], "0");
  EXPECT_EQ(j["row_names"].back(), "∅");
}

TEST(Cli, EquivDistinctWithWitness) {
  const Result r = invoke({"--semiring", "bool", "equiv", example("or_strict.tpc"),
                           example("or_lazy.tpc")});
  EXPECT_EQ(r.code, kExitDistinct);
  EXPECT_EQ(r.out.rfind("distinct", 0), 0u);
  EXPECT_NE(r.out.find("at row"), std::string::npos);
}

TEST(Cli, EquivSwitches) {
  const Result r = invoke({"equiv", example("switch_dup.tpc"), example("switch_single.tpc")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "equivalent\n");
}

TEST(Cli, EquivBoundaryMismatchIsUserError) {
  const Result r = invoke({"equiv", example("identity.tpc"), example("coin_matrix.tpc")});
  EXPECT_EQ(r.code, kExitDistinct) << r.err;
  const Result bad = invoke({"equiv", example("identity.tpc"), example("proba_coin.tpc")});
  EXPECT_EQ(bad.code, kExitUserError);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
}

TEST(Cli, TypeErrorExitCode) {
  const Result r = invoke({"eval", example("bad_types.tpc")});
  EXPECT_EQ(r.code, kExitUserError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, ParseErrorExitCode) {
  const auto path = std::filesystem::temp_directory_path() / "tpcalc_cli_bad_syntax.tpc";
  std::ofstream(path) << "id<1> ; ;\n";
  const Result r = invoke({"eval", path.string()});
  EXPECT_EQ(r.code, kExitUserError);
  EXPECT_EQ(r.err.rfind("parse error:", 0), 0u) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, MissingFile) {
  EXPECT_EQ(invoke({"eval", "/nonexistent/file.tpc"}).code, kExitUserError);
}

TEST(Cli, SynthRoundTrip) {
  const Result r = invoke({"synth", example("identity2.json"), "--dom", "[(1+1)]", "--cod", "[(1+1)]"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto path = std::filesystem::temp_directory_path() / "tpcalc_cli_synth.tpc";
  std::ofstream(path) << r.out;
  const Result e = invoke({"equiv", path.string(), example("identity.tpc")});
  EXPECT_EQ(e.code, kExitOk) << e.out << e.err;
  std::filesystem::remove(path);
}

TEST(Cli, SynthShapeMismatch) {
  const Result r = invoke({"synth", example("identity2.json"), "--dom", "[1]", "--cod", "[(1+1)]"});
  EXPECT_EQ(r.code, kExitUserError);
}

TEST(Cli, Normalize) {
  const Result r = invoke({"normalize", example("snake.tpc")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, Render) {
  const Result r = invoke({"render", example("coin_matrix.tpc")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, Dims) {
  const Result r = invoke({"dims", "[(1+1),(1+1)]"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("dim 8\n0  {1:0,2:0}\n", 0), 0u) << r.out;
  const Result j = invoke({"--format", "json", "--fragment", "full", "dims", "[1]"});
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["dim"], 1);
  EXPECT_EQ(parsed["enumeration"].size(), 2u);
}

TEST(Cli, AxiomsSmallRun) {
  const Result r = invoke({"--iters", "2", "--format", "json", "axioms", "--depth", "2",
                           "--semirings", "nat"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["failures"], 0);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("TPCALC_SEED", "7", 1);
  const Result r = invoke({"--iters", "1", "--format", "json", "axioms", "--semirings", "bool"});
  ::unsetenv("TPCALC_SEED");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 7);
  const Result flag = invoke({"--seed", "9", "--iters", "1", "--format", "json", "axioms",
                              "--semirings", "bool"});
  EXPECT_EQ(nlohmann::json::parse(flag.out)["seed"], 9);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUserError);
  EXPECT_EQ(invoke({"--semiring", "complex", "dims", "[1]"}).code, kExitUserError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUserError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, FloatEquivIsRefused) {
  const Result r =
      invoke({"--semiring", "f64", "equiv", example("identity.tpc"), example("identity.tpc")});
  EXPECT_EQ(r.code, kExitUserError);
}

}  // namespace
}  // namespace tpcalc::cli
