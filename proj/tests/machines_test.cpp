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

#include "clint/machines.hpp"

#include <random>

#include <gtest/gtest.h>

#include "clint/calculus.hpp"
#include "corpus.hpp"

namespace clint {
namespace {

GameForm Form(std::vector<StandardRow> rows, std::string w) {
  StandardSequent s{ImpKind::kBimp, std::move(rows), std::move(w)};
  return Elementarize(Desequentize(s));
}

GameForm OneRow() { return Form({{"A", "B", "C", "W", "D", "E"}}, "W"); }

std::vector<GameForm> RefutedForms(std::size_t n, std::uint64_t seed) {
  std::vector<GameForm> out;
  for (const auto& k : testing::RandomFormulas(seed, 4 * n, testing::DefaultAtoms(), 1, 6,
                                               ImpKind::kBimp)) {
    if (out.size() == n) break;
    if (!IntProvable(IntSequent{{}, k})) out.push_back(MakeGameForm(k));
  }
  return out;
}

TEST(Engine, FirstDevirginizesEveryP) {
  auto idle = MakeIdle();
  BranchRecord r = Schedule(*idle, OneRow(), {});
  ASSERT_FALSE(r.run.empty());
  EXPECT_EQ(r.run[0].move.str(), "1.2.e.1.1.e.1");
  EXPECT_EQ(r.run[0].label, Label::kBot);
  EXPECT_EQ(r.run.size(), 1u);
  // FIRST and one empty SECOND pass.
  EXPECT_TRUE(r.quiescent);
  EXPECT_EQ(r.steps, 2u);
  EXPECT_FALSE(r.is_long());
  ASSERT_EQ(r.phases.size(), 2u);
  EXPECT_EQ(r.phases[1].first, Phase::kSecond);
}

TEST(Engine, BudgetIsChecked) {
  auto idle = MakeIdle();
  EXPECT_THROW(Schedule(*idle, OneRow(), {}, 0), std::invalid_argument);
  auto random = MakeRandomLegal(3, 100);
  BranchRecord r = Schedule(*random, OneRow(), {}, 5);
  EXPECT_EQ(r.steps, 5u);
  EXPECT_FALSE(r.quiescent);
}

TEST(Engine, RoutinesAnswerMatches) {
  // P1 = A gets 1; X1 = A, Y1 = A copied from it, so Z1 is answered.  Then
  // Q1 = A is matched, so R1 is answered too.
  GameForm g = Form({{"A", "A", "C", "A", "A", "E"}}, "W");
  auto adv = MakeScripted("s", {{1, "1.1.e.1.1.{0}"}, {1, "1.1.e.1.2.{0}"}, {1, "1.2.e.1.2.{0}"}});
  BranchRecord r = Schedule(*adv, g, {});
  ASSERT_TRUE(r.quiescent);
  std::vector<std::string> moves;
  for (const auto& lm : r.run) moves.push_back(std::string(LabelName(lm.label)) + " " + lm.move.str());
  std::vector<std::string> expected = {"BOT 1.2.e.1.1.e.1", "TOP 1.1.e.1.1.1", "TOP 1.1.e.1.2.1",
                                       "BOT 1.1.e.2.2",     "TOP 1.2.e.1.2.1", "BOT 1.2.e.2.3"};
  EXPECT_EQ(moves, expected);
  EXPECT_FALSE(r.is_long());
}

TEST(Engine, WMatcherForcesLong) {
  auto adv = MakeWMatcher();
  BranchRecord r = Schedule(*adv, OneRow(), {});
  ASSERT_TRUE(r.quiescent);
  ASSERT_TRUE(r.is_long());
  EXPECT_EQ(*r.delta, 2u);
  EXPECT_EQ(r.run[1].move.str(), "2.1");
  // THIRD answers the virgin Z and R once.
  ASSERT_EQ(r.run.size(), 4u);
  EXPECT_EQ(r.run[2].move.str(), "1.2.e.2.2");
  EXPECT_EQ(r.run[3].move.str(), "1.1.e.2.3");
  EXPECT_EQ(r.phases.back().first, Phase::kThird);
}

TEST(Engine, IllegalAdversaryIsFlagged) {
  auto adv = MakeScripted("bad", {{1, "2.5"}, {2, "2.6"}});
  BranchRecord r = Schedule(*adv, OneRow(), {});
  EXPECT_TRUE(r.adversary_illegal);
  EXPECT_FALSE(r.quiescent);
  EXPECT_NE(r.illegal_reason.find("already chosen"), std::string::npos);
  nlohmann::json j = BranchRecordToJson(r);
  EXPECT_EQ(j["flags"][0], "ADVERSARY_ILLEGAL");

  auto garbled = MakeScripted("garbled", {{1, "1.9.e:"}});
  EXPECT_TRUE(Schedule(*garbled, OneRow(), {}).adversary_illegal);
  auto dangling = MakeScripted("dangling", {{1, "2.{7}"}});
  EXPECT_TRUE(Schedule(*dangling, OneRow(), {}).adversary_illegal);
}

TEST(Registry, DuplicatesAndDefault) {
  Registry reg;
  reg.Register(1, [] { return MakeWMatcher(); });
  EXPECT_THROW(reg.Register(1, [] { return MakeIdle(); }), std::invalid_argument);
  EXPECT_EQ(reg.Lookup(1)->name(), "w-matcher");
  EXPECT_EQ(reg.Lookup(2)->name(), "idle");
  Registry from = Registry::FromJson(nlohmann::json::parse(R"({"entries": [
      {"c": 3, "adversary": {"kind": "random", "seed": 4}},
      {"c": 5, "adversary": {"kind": "script", "name": "two",
                             "script": [{"trigger": 1, "move": "2.{0}"}]}}]})"));
  EXPECT_EQ(from.Keys(), (std::vector<long>{3, 5}));
  EXPECT_EQ(from.Lookup(5)->name(), "two");
  EXPECT_THROW(AdversaryFromJson({{"kind", "oracle"}}), std::invalid_argument);
}

TEST(SchedulerProperty, DeterministicDualAndFair) {
  for (const auto& g : RefutedForms(40, 21)) {
    for (const auto& [name, make] : AdversarySuite()) {
      auto a = make();
      auto b = make();
      BranchRecord r1 = Schedule(*a, g, {7}, 200);
      BranchRecord r2 = Schedule(*b, g, {7}, 200);
      EXPECT_EQ(BranchRecordToJson(r1).dump(), BranchRecordToJson(r2).dump()) << name;
      EXPECT_EQ(FlipLabels(r1.epm_view), r1.run) << name;
      EXPECT_GE(r1.permission_steps.size() * kFairness, r1.steps) << name;
      EXPECT_TRUE(r1.quiescent) << name;
      EXPECT_FALSE(r1.adversary_illegal) << name;
      // The engine only moves in negative molecules and uses fresh constants.
      ResidualState st(g);
      for (const auto& lm : r1.run) {
        if (lm.label == Label::kBot) {
          EXPECT_EQ(lm.move.kind, Move::Kind::kChoice);
          EXPECT_FALSE(IsPositive(lm.move.component));
          EXPECT_EQ(lm.move.constant, FreshChoiceConstant(st));
        }
        st.Apply(lm);
      }
    }
  }
}

TEST(SchedulerProperty, QuiescenceIsAFixpoint) {
  // Continuing a quiescent branch with the idle adversary adds no moves.
  for (const auto& g : RefutedForms(30, 22)) {
    for (const auto& [name, make] : AdversarySuite()) {
      auto a = make();
      BranchRecord r = Schedule(*a, g, {});
      ASSERT_TRUE(r.quiescent);
      ResidualState st = Project(r.run, g);
      if (r.is_long()) {
        for (const auto& m : st.Molecules()) {
          if (m.id.metatype == Metatype::kZ || m.id.metatype == Metatype::kR) {
            EXPECT_TRUE(m.devirginized()) << name << " " << m.id.str();
          }
        }
        continue;
      }
      for (const auto& m : st.Molecules()) {
        if (m.devirginized()) continue;
        if (m.id.metatype == Metatype::kZ) {
          EXPECT_FALSE(MatchinglyDevirginized(st, {Metatype::kX, m.id.j, m.id.w, {}}) &&
                       MatchinglyDevirginized(st, {Metatype::kY, m.id.j, m.id.w, {}}));
        }
        if (m.id.metatype == Metatype::kR) {
          EXPECT_FALSE(MatchinglyDevirginized(st, {Metatype::kQ, m.id.j, m.id.w, {}}));
        }
        EXPECT_NE(m.id.metatype, Metatype::kP);
      }
    }
  }
}

TEST(Copycat, SpecExamples) {
  auto idle = MakeIdle();
  CopycatRecord r = ScheduleCopycat(*idle, Label::kBot, 10);
  ASSERT_FALSE(r.run.empty());
  EXPECT_EQ(r.run[0].move, "1.e:");
  EXPECT_TRUE(r.quiescent);
  EXPECT_EQ(r.iterations, 1u);

  // Adversary moves in conjunct 3 once three conjuncts are active.
  auto adv = MakeScripted("c3", {{3, "2.3.5"}});
  CopycatRecord c = ScheduleCopycat(*adv, Label::kBot, 50);
  std::vector<std::string> moves;
  for (const auto& m : c.run) moves.push_back(m.move);
  auto it = std::find(moves.begin(), moves.end(), "2.3.5");
  ASSERT_NE(it, moves.end());
  ASSERT_NE(it + 1, moves.end());
  EXPECT_EQ(*(it + 1), "1.001.5");
  EXPECT_FALSE(CheckDelayMatching(c).has_value());
}

TEST(Copycat, CatchUpAndFanOut) {
  // A root choice in the antecedent reaches every leaf; conjuncts activated
  // later are caught up.
  auto adv = MakeScripted("root", {{1, "1.e.4"}});
  CopycatRecord r = ScheduleCopycat(*adv, Label::kTop, 6);
  EXPECT_FALSE(CheckDelayMatching(r).has_value());
  CopycatState st = ProjectCopycat(r);
  for (std::size_t k = 1; k <= r.iterations; ++k) EXPECT_EQ(st.ConjunctChoice(k), 4);
  // Conjunct 7 chosen ahead of activation stays pending until caught up.
  auto ahead = MakeScripted("ahead", {{1, "2.7.2"}});
  CopycatRecord q = ScheduleCopycat(*ahead, Label::kBot, 100);
  EXPECT_TRUE(q.quiescent);
  EXPECT_GE(q.iterations, 7u);
  EXPECT_FALSE(CheckDelayMatching(q).has_value());
}

TEST(Copycat, IllegalAdversary) {
  auto adv = MakeScripted("bad", {{1, "1.e:"}});
  CopycatRecord r = ScheduleCopycat(*adv, Label::kTop, 10);
  EXPECT_TRUE(r.adversary_illegal);
  auto wrong_side = MakeScripted("side", {{1, "2.1.3"}});
  EXPECT_TRUE(ScheduleCopycat(*wrong_side, Label::kTop, 10).adversary_illegal);
}

TEST(CopycatProperty, DelayMatchingAndVerdict) {
  std::mt19937_64 rng(31);
  for (Label chooser : {Label::kTop, Label::kBot}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto adv = MakeRandomLegal(seed, 10);
      CopycatRecord r = ScheduleCopycat(*adv, chooser, 200);
      ASSERT_FALSE(r.adversary_illegal) << r.illegal_reason;
      EXPECT_TRUE(r.quiescent);
      EXPECT_FALSE(CheckDelayMatching(r).has_value()) << *CheckDelayMatching(r);
      for (int t = 0; t < 16; ++t) {
        std::uint64_t mask = rng();
        EXPECT_EQ(EvalCopycat(r, [&](long a) { return (mask >> (a % 64)) & 1; }), Label::kTop);
      }
    }
  }
}

}  // namespace
}  // namespace clint
