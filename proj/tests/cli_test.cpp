// Copyright 2026 The clint Authors.
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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "clint/calculus.hpp"
#include "clint/kripke.hpp"
#include "corpus.hpp"

namespace clint {
namespace {

struct Result {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result Cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kPeirce = "((P -o Q) -o P) -o P";

TEST(Cli, Prove) {
  Result r = Cli({"prove", kPeirce});
  EXPECT_EQ(r.code, 1);
  KripkeModel m = KripkeModelFromJson(r.json()["countermodel"]);
  EXPECT_TRUE(RefutesAt(m, m.root, ParseIntInput(kPeirce, ImpKind::kBimp)));
  r = Cli({"prove", "(P->>(Q->>R))->>((P->>Q)->>(P->>R))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(CheckInt(IntProofFromJson(r.json()["proof"])));
  EXPECT_EQ(Cli({"prove", "-"}, "P -o P").code, 0);
  EXPECT_EQ(Cli({"prove", "--kind", "pimp", "P ->> P"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  EXPECT_EQ(Cli({"prove", "P -o"}).code, 2);
  EXPECT_EQ(Cli({"prove"}).code, 2);
  EXPECT_EQ(Cli({"prove", "--kind", "xyz", "P"}).code, 2);
  // The kind has to match the arrows.
  EXPECT_EQ(Cli({"prove", "--kind", "pimp", "P -o P"}).code, 2);
  EXPECT_EQ(Cli({"simulate", kPeirce, "--budget", "0"}).code, 2);
  EXPECT_EQ(Cli({"simulate", kPeirce, "--adversary", "{\"kind\": 1"}).code, 2);
  EXPECT_EQ(Cli({"star-check", kPeirce, "--registry", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(Cli({"--help"}).code, 0);
}

TEST(Cli, Countermodel) {
  Result r = Cli({"countermodel", kPeirce});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["bound"], 5);
  EXPECT_EQ(KripkeModelFromJson(r.json()["countermodel"]).size(), 2u);
  EXPECT_EQ(Cli({"countermodel", "P -o P"}).code, 1);
  EXPECT_EQ(Cli({"countermodel", kPeirce, "--bound", "1"}).code, 1);
}

TEST(Cli, TransformAndSimulate) {
  Result t = Cli({"transform", kPeirce});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.json()["game_form"]["s"], 3);

  Result s = Cli({"simulate", kPeirce});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.json()["verdict"], "BOT");
  EXPECT_EQ(s.json()["record"]["adversary"], "idle");
  s = Cli({"simulate", kPeirce, "--adversary", R"({"kind": "w-matcher"})", "--valuation", "4"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.json()["record"]["valuation"]["z"], 4);
  EXPECT_EQ(s.json()["record"]["length"], "LONG");
  // Too small a budget never reaches quiescence.
  EXPECT_EQ(Cli({"simulate", kPeirce, "--budget", "1"}).code, 1);
  EXPECT_EQ(Cli({"simulate", "P -o P"}).code, 1);

  Result p = Cli({"simulate", "((P ->> Q) ->> P) ->> P"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.json()["reduced_from"], "pimp");
}

TEST(Cli, StarCheckWithRegistryFile) {
  const std::string path = ::testing::TempDir() + "clint_registry.json";
  {
    std::ofstream f(path);
    f << R"({"entries": [{"c": 3, "adversary": {"kind": "greedy"}},
                         {"c": 5, "adversary": {"kind": "script", "name": "s",
                                                "script": [{"trigger": 1, "move": "2.{-1}"}]}}]})";
  }
  Result r = Cli({"star-check", kPeirce, "--registry", path});
  std::remove(path.c_str());
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  ASSERT_EQ(r.json()["checks"].size(), 2u);
  EXPECT_EQ(r.json()["checks"][1]["c"], 5);
  EXPECT_EQ(Cli({"star-check", kPeirce}).json()["checks"].size(), 8u);
}

TEST(CliProperty, DeterministicOutput) {
  for (const auto& k : testing::RandomFormulas(5, 12, testing::DefaultAtoms(), 1, 5, ImpKind::kBimp)) {
    for (const char* cmd : {"prove", "transform", "simulate", "countermodel"}) {
      Result a = Cli({cmd, k.str()});
      Result b = Cli({cmd, k.str()});
      EXPECT_EQ(a.code, b.code) << cmd << " " << k.str();
      EXPECT_EQ(a.out, b.out) << cmd << " " << k.str();
    }
    // prove and countermodel agree on the answer.
    bool provable = Cli({"prove", k.str()}).code == 0;
    EXPECT_EQ(Cli({"countermodel", k.str()}).code == 0, !provable) << k.str();
  }
}

}  // namespace
}  // namespace clint
