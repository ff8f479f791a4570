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

#include "clint/gamecore.hpp"

#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"

namespace clint {
namespace {

GameForm Form(std::vector<StandardRow> rows, std::string w) {
  StandardSequent s{ImpKind::kBimp, std::move(rows), std::move(w)};
  return Elementarize(Desequentize(s));
}

// One row whose P atom is W.
GameForm OneRow() { return Form({{"A", "B", "C", "W", "D", "E"}}, "W"); }

LabMove Top(const std::string& m, std::size_t s) { return {Label::kTop, ParseMove(m, s), 0}; }
LabMove Bot(const std::string& m, std::size_t s) { return {Label::kBot, ParseMove(m, s), 0}; }

// Random legal run: both players pick uniformly among patient templates, with
// constants drawn from the used ones and one fresh.
Run RandomRun(const GameForm& form, std::mt19937_64& rng, std::size_t n) {
  ResidualState st(form);
  clint::Run run;
  for (std::size_t k = 0; k < n; ++k) {
    Label who = rng() % 2 ? Label::kTop : Label::kBot;
    auto t = LegalMoveTemplates(st, who);
    if (t.empty()) continue;
    std::string text = t[rng() % t.size()];
    if (auto p = text.find("{a}"); p != std::string::npos) {
      std::vector<long> pool(st.used_constants().begin(), st.used_constants().end());
      pool.push_back(FreshChoiceConstant(st));
      text.replace(p, 3, std::to_string(pool[rng() % pool.size()]));
    }
    LabMove lm{who, ParseMove(text, st.s()), k};
    st.Apply(lm);
    run.push_back(lm);
  }
  return run;
}

TEST(Moves, ParsePrintRoundTrip) {
  for (const char* m : {"2.5", "1.1.e:", "1.1.01.1.1.3", "1.1.e.1.2.9", "1.1.0.2.7", "1.2.e.1.1.e.1",
                        "1.2.1.1.1.10:", "1.2.e.1.2.4", "1.2.11.2.8", "1.2.0:"}) {
    EXPECT_EQ(ParseMove(m, 1).str(), m);
  }
  Move p = ParseMove("1.2.e.1.1.01.4", 1);
  EXPECT_EQ(p.component, Metatype::kP);
  EXPECT_EQ(p.u, "01");
  EXPECT_EQ(ParseMove("1.1.e.1.1.4", 1).component, Metatype::kX);
  EXPECT_EQ(ParseMove("1.2.e.2.4", 1).component, Metatype::kR);
}

TEST(Moves, RejectsMalformed) {
  for (const char* m : {"", "3.1", "2.0", "2.01", "2.x", "2.1:", "1.3.e:", "1.0.e:", "1.1.2.2.1",
                        "1.1.e.1.1.e:", "1.1.e.1.3.1", "1.2.e.1.1.5", "1.1.e.2.-1", "1.1"}) {
    EXPECT_THROW(ParseMove(m, 1), std::invalid_argument) << m;
  }
}

TEST(Legality, SpecExamples) {
  GameForm g = OneRow();
  ResidualState st(g);
  EXPECT_TRUE(Legal(st, Bot("1.2.e.1.1.e.1", 1)));
  EXPECT_FALSE(Legal(st, Top("1.2.e.1.1.e.1", 1)));
  EXPECT_FALSE(Legal(st, Bot("2.5", 1)));
  st.Apply(Top("2.5", 1));
  EXPECT_FALSE(Legal(st, Top("2.7", 1)));
  EXPECT_EQ(*st.WhyIllegal(Top("2.7", 1)), "consequent already chosen");
  EXPECT_FALSE(Legal(st, Bot("1.1.e:", 1)));
  EXPECT_FALSE(Legal(st, Top("1.1.e.2.3", 1)));
  EXPECT_THROW(Project({Top("2.5", 1), Top("2.7", 1)}, g), IllegalRun);
  try {
    Project({Top("2.5", 1), Top("2.7", 1)}, g);
  } catch (const IllegalRun& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(Legality, ReplicationSplitsMolecules) {
  ResidualState st = Project({Top("1.1.e:", 1), Bot("1.1.0.2.7", 1)}, OneRow());
  auto z0 = st.Find({Metatype::kZ, 1, "0", {}});
  auto z1 = st.Find({Metatype::kZ, 1, "1", {}});
  ASSERT_TRUE(z0 && z1);
  ASSERT_TRUE(z0->devirginized());
  EXPECT_EQ(z0->state->constant, 7);
  EXPECT_EQ(st.Content(*z0), "^C(7)");
  EXPECT_FALSE(z1->devirginized());
  EXPECT_EQ(st.Content(*z1), "Ux ^C(x)");
  EXPECT_FALSE(st.Find({Metatype::kZ, 1, "", {}}));
  EXPECT_FALSE(Legal(st, Top("1.1.e:", 1)));
  EXPECT_TRUE(Legal(st, Top("1.1.0:", 1)));
}

TEST(Legality, ImpatientMovesFanOut) {
  GameForm g = OneRow();
  ResidualState st = Project({Top("1.1.e:", 1), Top("1.1.0:", 1), Top("1.1.e.1.1.3", 1)}, g);
  for (const char* w : {"00", "01", "1"}) {
    auto x = st.Find({Metatype::kX, 1, w, {}});
    ASSERT_TRUE(x && x->devirginized()) << w;
    EXPECT_EQ(x->state->essence, (MoleculeId{Metatype::kX, 1, w, {}}));
  }
  EXPECT_FALSE(Legal(st, Top("1.1.01.1.1.4", 1)));
  EXPECT_TRUE(Legal(st, Top("1.1.0.1.2.4", 1)));
  EXPECT_FALSE(Legal(st, Top("1.1.10.1.2.4", 1)));
  ResidualState later = Fold(st, {Top("1.1.1.1.2.4", 1)});
  EXPECT_FALSE(Legal(later, Top("1.1.e.1.2.4", 1)));
  EXPECT_EQ(st.supermolecules().size(), 3u);
}

TEST(Legality, InnerTrees) {
  GameForm g = OneRow();
  ResidualState st = Project({Top("1.2.e.1.1.e:", 1), Bot("1.2.e.1.1.0.4", 1)}, g);
  EXPECT_EQ(st.InnerTree(2, ""), (std::set<Bits>{"", "0", "1"}));
  EXPECT_TRUE(st.Find({Metatype::kP, 1, "", "0"})->devirginized());
  EXPECT_FALSE(st.Find({Metatype::kP, 1, "", "1"})->devirginized());
  EXPECT_FALSE(Legal(st, Bot("1.2.e.1.1.e.5", 1)));
  // Outer replication copies the inner tree and its states.
  st.Apply(Top("1.2.e:", 1));
  auto p = st.Find({Metatype::kP, 1, "1", "0"});
  ASSERT_TRUE(p && p->devirginized());
  EXPECT_EQ(p->state->essence, (MoleculeId{Metatype::kP, 1, "", "0"}));
  EXPECT_FALSE(Legal(st, Top("1.2.e.1.1.1:", 1)));
  EXPECT_TRUE(Legal(st, Top("1.2.1.1.1.1:", 1)));
}

TEST(Ledger, FreshConstantAndMatching) {
  GameForm g = OneRow();
  ResidualState st(g);
  EXPECT_EQ(FreshChoiceConstant(st), 1);
  st.Apply(Bot("1.2.e.1.1.e.1", 1));
  st.Apply(Top("1.1.e.1.1.3", 1));
  EXPECT_EQ(FreshChoiceConstant(st), 2);
  st.Apply(Top("2.1", 1));
  EXPECT_TRUE(MatchinglyDevirginized(st, {Metatype::kW, 0, {}, {}}));
  EXPECT_TRUE(MatchinglyDevirginized(st, {Metatype::kP, 1, "", ""}));
  EXPECT_FALSE(MatchinglyDevirginized(st, {Metatype::kX, 1, "", {}}));
  st.Apply(Top("1.2.e.1.2.2", 1));
  EXPECT_EQ(FreshChoiceConstant(st), 4);
}

TEST(Ledger, MoleculeOrder) {
  ResidualState st = Project({Top("1.1.e:", 1)}, OneRow());
  std::vector<std::string> ids;
  for (const auto& m : st.Molecules()) ids.push_back(m.id.str());
  std::vector<std::string> expected = {"[P1]^e_e", "[Q1]^e", "[R1]^e", "[X1]^0", "[X1]^1",
                                       "[Y1]^0", "[Y1]^1", "[Z1]^0", "[Z1]^1", "[W]"};
  EXPECT_EQ(ids, expected);
}

TEST(Chains, MasterChainOfOneRowForm) {
  GameForm g = OneRow();
  clint::Run run = {Bot("1.2.e.1.1.e.1", 1), Top("2.1", 1)};
  ResidualState st = Project(run, g);
  auto chain = FindMasterChain(st, st.length());
  ASSERT_TRUE(chain.has_value());
  ASSERT_EQ(chain->size(), 2u);
  EXPECT_EQ((*chain)[0].str(), "[P1]^e_e");
  EXPECT_EQ((*chain)[1].str(), "[W]");
  EXPECT_TRUE(IsOpenChain(st, st.length(), *chain));
  // [W] devirginized after delta is no OGSM.
  EXPECT_FALSE(FindMasterChain(st, 1).has_value());
  EXPECT_EQ(Base(st, st.length(), {Metatype::kW, 0, {}, {}}), (std::set<std::string>{"W"}));
}

// Two rows: P1 = A feeds X1, Y1 = B through Z1 = C into Q2 = C, closing
// row 2, and R2 = W.
TEST(Chains, LongerChainsAndOpenness) {
  GameForm g = Form({{"A", "A", "C", "A", "D", "E"}, {"F", "G", "H", "B", "C", "W"}}, "W");
  const std::size_t s = 2;
  clint::Run run = {Bot("1.3.e.1.1.e.1", s), Bot("1.4.e.1.1.e.2", s),
             Top("1.1.e.1.1.1", s),   Top("1.1.e.1.2.1", s),
             Bot("1.1.e.2.3", s),     Top("1.4.e.1.2.3", s),
             Bot("1.4.e.2.4", s),     Top("2.4", s)};
  ResidualState st = Project(run, g);
  std::vector<MoleculeId> c = {{Metatype::kP, 1, "", ""}, {Metatype::kX, 1, "", {}},
                               {Metatype::kZ, 1, "", {}}, {Metatype::kQ, 2, "", {}},
                               {Metatype::kR, 2, "", {}}, {Metatype::kW, 0, {}, {}}};
  std::string why;
  EXPECT_TRUE(IsChain(st, st.length(), c, &why)) << why;
  EXPECT_TRUE(IsOpenChain(st, st.length(), c));
  auto master = FindMasterChain(st, st.length());
  ASSERT_TRUE(master.has_value());
  EXPECT_EQ(*master, c);
  // Swapping X for Y gives a larger chain with the same length.
  std::vector<MoleculeId> y = c;
  y[1] = {Metatype::kY, 1, "", {}};
  EXPECT_TRUE(IsOpenChain(st, st.length(), y));
  EXPECT_LT(c, y);
  // Row 2's P starts no open chain through Q2.
  EXPECT_EQ(Base(st, st.length(), {Metatype::kW, 0, {}, {}}), (std::set<std::string>{"A"}));
  std::vector<MoleculeId> bad = {{Metatype::kP, 1, "", ""}, {Metatype::kZ, 1, "", {}}};
  EXPECT_FALSE(IsChain(st, st.length(), bad, &why));
}

TEST(Eval, WorkedExamples) {
  GameForm g = OneRow();
  auto all_true = [](const Token&) { return true; };
  auto all_false = [](const Token&) { return false; };
  ResidualState empty(g);
  // !P is false, so (!P -> Q) holds while R is virgin: the antecedent fails.
  EXPECT_EQ(Eval(empty, all_true), Label::kTop);
  ResidualState st = Project({Bot("1.2.e.1.1.e.1", 1), Top("2.1", 1), Bot("1.2.e.2.2", 1),
                              Bot("1.1.e.2.3", 1)},
                             g);
  EXPECT_EQ(Eval(st, all_true), Label::kTop);
  EXPECT_EQ(Eval(st, all_false), Label::kTop);  // R false
  auto only_w_false = [](const Token& t) { return t.letter != "^W"; };
  EXPECT_EQ(Eval(st, only_w_false), Label::kBot);
}

TEST(GameProperty, FoldIsCompositional) {
  std::mt19937_64 rng(11);
  auto forms = testing::RandomFormulas(5, 40, testing::DefaultAtoms(), 1, 5, ImpKind::kBimp);
  for (const auto& k : forms) {
    GameForm g = MakeGameForm(k);
    clint::Run run = RandomRun(g, rng, 30);
    std::size_t cut = run.empty() ? 0 : rng() % (run.size() + 1);
    clint::Run a(run.begin(), run.begin() + static_cast<long>(cut));
    clint::Run b(run.begin() + static_cast<long>(cut), run.end());
    ResidualState whole = Project(run, g);
    ResidualState parts = Fold(Project(a, g), b);
    EXPECT_EQ(StateToJson(whole), StateToJson(parts)) << k.str();
  }
}

TEST(GameProperty, LedgerMatchesTrees) {
  std::mt19937_64 rng(12);
  auto forms = testing::RandomFormulas(6, 40, testing::DefaultAtoms(), 1, 5, ImpKind::kBimp);
  for (const auto& k : forms) {
    GameForm g = MakeGameForm(k);
    ResidualState st = Project(RandomRun(g, rng, 40), g);
    const std::size_t s = st.s();
    std::map<std::pair<Metatype, std::size_t>, std::size_t> count;
    for (const auto& m : st.Molecules()) ++count[{m.id.metatype, m.id.j}];
    for (std::size_t j = 1; j <= s; ++j) {
      std::size_t leaves = 0, inner = 0;
      for (const auto& w : st.OuterTree(j)) leaves += !st.OuterTree(j).count(w + "0");
      for (Metatype c : {Metatype::kX, Metatype::kY, Metatype::kZ}) {
        EXPECT_EQ((count[{c, j}]), leaves);
      }
      leaves = 0;
      for (const auto& w : st.OuterTree(s + j)) {
        if (st.OuterTree(s + j).count(w + "0")) continue;
        ++leaves;
        for (const auto& u : st.InnerTree(s + j, w)) inner += !st.InnerTree(s + j, w).count(u + "0");
      }
      EXPECT_EQ((count[{Metatype::kQ, j}]), leaves);
      EXPECT_EQ((count[{Metatype::kP, j}]), inner);
    }
    // Every devirginized molecule descends from a recorded supermolecule with
    // the same content and an address below it.
    for (const auto& m : st.Molecules()) {
      if (!m.state) continue;
      const MoleculeId& e = m.state->essence;
      EXPECT_TRUE(IsPrefix(e.w, m.id.w) && IsPrefix(e.u, m.id.u));
      bool found = false;
      for (const auto& sm : st.supermolecules()) {
        found |= sm.id == e && sm.content == *st.ContentToken(m);
      }
      EXPECT_TRUE(found) << m.id.str();
    }
  }
}

TEST(GameProperty, RunJsonRoundTrip) {
  std::mt19937_64 rng(13);
  GameForm g = MakeGameForm(ParseIntFormula("((P -o Q) -o P) -o P", ImpKind::kBimp));
  for (int t = 0; t < 20; ++t) {
    clint::Run run = RandomRun(g, rng, 25);
    EXPECT_EQ(RunFromJson(RunToJson(run), g.sequent.s()), run);
    EXPECT_EQ(FlipLabels(FlipLabels(run)), run);
  }
}

// Templates are sound: every instantiated one is legal, and every patient
// choice at a leaf with a virgin slot shows up.
TEST(GameProperty, TemplatesAreLegal) {
  std::mt19937_64 rng(14);
  GameForm g = MakeGameForm(ParseIntFormula("(P -o Q) -o (Q -o R) -o P -o R", ImpKind::kBimp));
  for (int t = 0; t < 20; ++t) {
    ResidualState st = Project(RandomRun(g, rng, 20), g);
    for (Label who : {Label::kTop, Label::kBot}) {
      auto templates = LegalMoveTemplates(st, who);
      for (auto text : templates) {
        if (auto p = text.find("{a}"); p != std::string::npos) text.replace(p, 3, "9");
        EXPECT_TRUE(Legal(st, {who, ParseMove(text, st.s()), 0})) << text;
      }
      std::size_t virgin = 0;
      for (const auto& m : st.Molecules()) virgin += !m.state && Owner(m.id.metatype) == who;
      std::size_t choices = 0;
      for (const auto& text : templates) choices += text.find("{a}") != std::string::npos;
      EXPECT_EQ(choices, virgin);
    }
  }
}

TEST(GameProperty, NegativeSupermoleculesFromFreshConstantsAreDistinct) {
  // When BOT always uses fresh constants no two negative supermolecules
  // share a content.
  std::mt19937_64 rng(15);
  auto forms = testing::RandomFormulas(7, 30, testing::DefaultAtoms(), 2, 5, ImpKind::kBimp);
  for (const auto& k : forms) {
    GameForm g = MakeGameForm(k);
    ResidualState st(g);
    for (int n = 0; n < 30; ++n) {
      Label who = rng() % 2 ? Label::kTop : Label::kBot;
      auto t = LegalMoveTemplates(st, who);
      if (t.empty()) continue;
      std::string text = t[rng() % t.size()];
      if (auto p = text.find("{a}"); p != std::string::npos) {
        long a = who == Label::kBot || st.used_constants().empty()
                     ? FreshChoiceConstant(st)
                     : *st.used_constants().begin();
        text.replace(p, 3, std::to_string(a));
      }
      st.Apply({who, ParseMove(text, st.s()), 0});
    }
    std::set<Token> seen;
    for (const auto& sm : st.supermolecules()) {
      if (IsPositive(sm.id.metatype)) continue;
      EXPECT_TRUE(seen.insert(sm.content).second) << sm.id.str();
    }
  }
}

}  // namespace
}  // namespace clint
