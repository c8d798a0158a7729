// Copyright 2026 The simgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "simgame/cli.hpp"
#include "support.hpp"

namespace simgame {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(SIMGAME_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

TEST(Cli, GenTrustPipedIntoSolve) {
  auto gen = run({"gen", "trust"});
  ASSERT_EQ(gen.code, 0);
  auto solve = run({"solve", "-", "--c", "5/1"}, gen.out);
  ASSERT_EQ(solve.code, 0) << solve.err;
  auto doc = Json::parse(solve.out);
  bool found = false;
  for (const auto& comp : doc["components"]) {
    for (const auto& v : comp["vertex_profiles"]) {
      if (v["p1"] == Json::array({"1/6", "0/1", "5/6"}) && v["p2"] == Json::array({"29/30", "1/30"})) {
        found = true;
      }
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(doc["p1_actions"], Json::array({"T", "WO", "SIM"}));
}

TEST(Cli, SolveMatchesGoldenOutput) {
  auto r = run({"solve", fixture("trust.json"), "--c", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(fixture("golden/solve_trust_c5.json")));
  EXPECT_EQ(run({"solve", fixture("trust.json"), "--c", "5"}).out, r.out);
}

TEST(Cli, FastAgreesWithEnumerationOnGenericFixtures) {
  for (const char* name : {"generic_trust.json", "generic_3x3.json", "generic_4x4.json",
                           "generic_5x4.json"}) {
    for (const char* c : {"1/100", "1/10"}) {
      auto full = run({"solve", fixture(name), "--c", c});
      auto fast = run({"solve", fixture(name), "--c", c, "--fast"});
      ASSERT_EQ(full.code, 0) << full.err;
      ASSERT_EQ(fast.code, 0) << fast.err;
      EXPECT_EQ(Json::parse(full.out)["components"], Json::parse(fast.out)["components"])
          << name << " at c=" << c;
    }
  }
}

TEST(Cli, FastRefusesNonGenericGame) {
  auto gen = run({"gen", "guess", "--n", "3"});
  auto r = run({"solve", "-", "--c", "1/10", "--fast"}, gen.out);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("level=error code=not_generic msg=", 0), 0u) << r.err;
  EXPECT_NE(r.err.find("without --fast"), std::string::npos);
}

TEST(Cli, BadInputsExitOne) {
  for (const char* name : {"bad_ragged.json", "bad_float.json", "bad_zero_denominator.json",
                           "bad_syntax.json"}) {
    auto r = run({"solve", fixture(name), "--c", "1"});
    EXPECT_EQ(r.code, 1) << name;
    EXPECT_EQ(r.err.rfind("level=error code=parse msg=", 0), 0u) << r.err;
  }
  EXPECT_EQ(run({"solve", fixture("missing.json"), "--c", "1"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"solve", fixture("trust.json")}).code, 1);
  EXPECT_EQ(run({"solve", fixture("trust.json"), "--c", "0.5"}).code, 1);
  EXPECT_EQ(run({"solve", fixture("trust.json"), "--c", "1", "--bogus"}).code, 1);
  EXPECT_EQ(run({"solve", fixture("trust.json"), "--c", "1", "--policy", "WO,WO"}).code, 1);
  EXPECT_EQ(run({"voi", fixture("trust.json"), "--pi2", "1"}).code, 1);
  EXPECT_EQ(run({"gen", "poker"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ActionCapFromEnvironment) {
  ::setenv("SIMGAME_ACTION_CAP", "2", 1);
  auto r = run({"solve", fixture("trust.json"), "--c", "1"});
  ::unsetenv("SIMGAME_ACTION_CAP");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("code=cap_exceeded"), std::string::npos);
  EXPECT_EQ(run({"solve", fixture("trust.json"), "--c", "1"}).code, 0);
}

TEST(Cli, SweepWritesCsvs) {
  auto dir = std::filesystem::temp_directory_path() / "simgame_cli_sweep";
  std::filesystem::remove_all(dir);
  auto r = run({"sweep", fixture("trust.json"), "--out", dir.string(), "--samples", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["breakpoints"], Json::array({"0/1", "150/7"}));
  EXPECT_EQ(slurp(dir / "breakpoints.csv"), slurp(fixture("golden/sweep_trust/breakpoints.csv")));
  EXPECT_EQ(slurp(dir / "segments.csv"), slurp(fixture("golden/sweep_trust/segments.csv")));
  std::istringstream samples(slurp(dir / "samples.csv"));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(samples, line)) ++rows;
  EXPECT_EQ(rows, 1 + 5 * Json::parse(r.out)["segments"].get<std::size_t>());
  std::filesystem::remove_all(dir);
}

TEST(Cli, VoiClassifyWelfareAndConstruct) {
  auto voi = run({"voi", fixture("trust.json"), "--pi2", "29/30,1/30"});
  ASSERT_EQ(voi.code, 0);
  EXPECT_EQ(Json::parse(voi.out)["voi"], "5/1");
  auto cl = run({"classify", fixture("trust.json")});
  ASSERT_EQ(cl.code, 0);
  EXPECT_EQ(Json::parse(cl.out)["is_generalized_trust_game"], true);
  EXPECT_EQ(Json::parse(cl.out)["genericity_violations"], Json::array({"duplicate payoff 0"}));
  auto w = run({"welfare", fixture("trust.json"), "--grid", "0,5,150/7,25"});
  ASSERT_EQ(w.code, 0);
  EXPECT_EQ(Json::parse(w.out)["grid"].size(), 4u);
  auto t = run({"trust-construct", fixture("trust.json"), "--c", "5"});
  ASSERT_EQ(t.code, 0) << t.err;
  auto doc = Json::parse(t.out);
  EXPECT_EQ(doc["case"], "B");
  EXPECT_EQ(doc["candidates"][0]["p"], "5/6");
  EXPECT_EQ(doc["candidates"][0]["alpha"], "1/150");
  auto fail = run({"trust-construct", fixture("trust.json"), "--c", "25"});
  EXPECT_EQ(fail.code, 2);
  EXPECT_NE(fail.err.find("code=verification_failed"), std::string::npos);
}

TEST(Cli, AllPoliciesAndExplicitPolicy) {
  auto r = run({"solve", fixture("tiebreak.json"), "--c", "1/10", "--all-policies"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["policies"].size(), 2u);
  auto p = run({"solve", fixture("tiebreak.json"), "--c", "1/10", "--policy", "a1,a2"});
  EXPECT_EQ(p.code, 0) << p.err;
}

TEST(Cli, GenFamiliesRoundTrip) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"gen", "cafes", "--x", "2,3,5", "--y", "1,1,1"},
        {"gen", "joint_project", "--k", "3", "--explicit"},
        {"gen", "joint_project", "--k", "456976"},
        {"gen", "commitment"},
        {"gen", "chicken"},
        {"gen", "stag_hunt"},
        {"gen", "battle_of_sexes"},
        {"gen", "trust", "--coop", "1", "--defect-gain", "1", "--defect-loss", "1"}}) {
    auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NO_THROW(parse_game(r.out));
  }
  auto pred = run({"gen", "cafes", "--x", "1,2", "--y", "1,1", "--predictions"});
  ASSERT_EQ(pred.code, 0);
  EXPECT_EQ(Json::parse(pred.out)["predictions"][2]["voi"], "2/3");
  EXPECT_EQ(run({"gen", "trust", "--coop", "0"}).code, 1);
}

}  // namespace
}  // namespace simgame
