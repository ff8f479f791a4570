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

#include "clint/transform.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"

namespace clint {
namespace {

IntFormula B(const std::string& text) { return ParseIntFormula(text, ImpKind::kBimp); }

std::vector<IntFormula> Corpus(ImpKind kind, std::uint64_t seed, std::size_t random) {
  auto c = testing::EnumerateFormulas(testing::DefaultAtoms(), 3, kind);
  auto extra = testing::RandomFormulas(seed, random, testing::DefaultAtoms(), 4, 7, kind);
  c.insert(c.end(), extra.begin(), extra.end());
  return c;
}

TEST(Standardize, WorkedExample) {
  Standardization st = Standardize(B("Q -o ((Q -o R) -o R)"));
  IntSequent expected = ParseIntSequent(
      "_w1 -o (Q -o R), _w2 -o (_w1 -o R), _w3 -o (Q -o _w2),"
      " (Q -o R) -o _w1, (_w1 -o R) -o _w2, (Q -o _w2) -o _w3 => _w3",
      ImpKind::kBimp, true);
  EXPECT_EQ(st.sequent.ToSequent(), expected) << st.sequent.ToSequent().str();
  EXPECT_EQ(st.sequent.s(), 3u);
  EXPECT_EQ(st.names.NameOf(B("Q -o R")), "_w1");
  EXPECT_EQ(st.names.NameOf(B("Q")), "Q");
  EXPECT_THROW(st.names.NameOf(B("P -o P")), std::out_of_range);
}

TEST(Standardize, AtomAndFreshNames) {
  Standardization atom = Standardize(B("P"));
  EXPECT_EQ(atom.sequent.s(), 0u);
  EXPECT_EQ(atom.sequent.w, "P");
  EXPECT_EQ(Desequentize(atom.sequent), AffineFormula::Atom("P"));

  IntFormula k = ParseIntFormula("_w1 -o _w3 -o P", ImpKind::kBimp, true);
  Standardization st = Standardize(k);
  ASSERT_EQ(st.names.entries.size(), 2u);
  EXPECT_EQ(st.names.entries[0].second, "_w2");
  EXPECT_EQ(st.names.entries[1].second, "_w4");
}

TEST(Standardize, ParallelKind) {
  IntFormula k = ParseIntFormula("(P ->> Q) ->> P", ImpKind::kPimp);
  Standardization st = Standardize(k);
  EXPECT_EQ(st.sequent.kind, ImpKind::kPimp);
  EXPECT_TRUE(st.sequent.ToSequent().str().find("->>") != std::string::npos);
  EXPECT_EQ(AsStandard(st.sequent.ToSequent(), ImpKind::kPimp), st.sequent);
  EXPECT_FALSE(AsStandard(st.sequent.ToSequent(), ImpKind::kBimp).has_value());
}

TEST(Standardize, ReadBackShape) {
  for (const auto& k : Corpus(ImpKind::kBimp, 3, 50)) {
    Standardization st = Standardize(k);
    auto back = AsStandard(st.sequent.ToSequent(), ImpKind::kBimp);
    ASSERT_TRUE(back.has_value()) << k.str();
    EXPECT_EQ(*back, st.sequent);
    EXPECT_EQ(st.sequent.s(), st.names.entries.size());
  }
  EXPECT_FALSE(AsStandard(ParseIntSequent("P -o Q => R", ImpKind::kBimp), ImpKind::kBimp));
  EXPECT_FALSE(AsStandard(ParseIntSequent("P, Q => R", ImpKind::kBimp), ImpKind::kBimp));
}

// K together with its standard antecedent proves the name of K.
TEST(StandardProperty, FormulaAndRowsProveName) {
  for (ImpKind kind : {ImpKind::kBimp, ImpKind::kPimp}) {
    auto ks = testing::RandomFormulas(kind == ImpKind::kBimp ? 53 : 59, 200,
                                      testing::DefaultAtoms(), 1, 8, kind);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      IntSequent s = Standardize(ks[i]).sequent.ToSequent();
      s.antecedent.insert(s.antecedent.begin(), ks[i]);
      ASSERT_TRUE(IntProvable(s)) << ks[i].str();
      // The oracle is slow on long antecedents; sample it.
      if (i % 20 == 0) ASSERT_TRUE(testing::LjtProvable(s)) << ks[i].str();
    }
  }
}

// K is provable exactly when its standard sequent is.
TEST(StandardProperty, ProvabilityPreserved) {
  for (ImpKind kind : {ImpKind::kBimp, ImpKind::kPimp}) {
    for (const auto& k : Corpus(kind, 61, 150)) {
      IntSequent s = Standardize(k).sequent.ToSequent();
      const bool expected = testing::LjtProvable(IntSequent{{}, k});
      ASSERT_EQ(IntProvable(s), expected) << k.str();
      if (k.implication_count() <= 3) {
        ASSERT_EQ(testing::LjtProvable(s), expected) << k.str();
      }
    }
  }
}

// A countermodel of K with each name valued as its subformula forces every
// row everywhere, keeps names equivalent to what they name, and refutes the
// standard sequent at the root.
TEST(StandardProperty, NamingModelRefutesStandardSequent) {
  for (ImpKind kind : {ImpKind::kBimp, ImpKind::kPimp}) {
    for (const auto& k : Corpus(kind, 67, 150)) {
      SearchOutcome out = IntProve(IntSequent{{}, k});
      if (out.proved()) continue;
      Standardization st = Standardize(k);
      KripkeModel m = ExtendWithNames(TraceModel(*out.trace), st);
      ASSERT_TRUE(Validate(m).empty()) << k.str();
      IntSequent s = st.sequent.ToSequent();
      for (std::size_t w = 0; w < m.size(); ++w) {
        for (const auto& g : s.antecedent) ASSERT_TRUE(Force(m, w, g)) << k.str();
        for (const auto& [h, name] : st.names.entries) {
          ASSERT_EQ(Force(m, w, h), Force(m, w, IntFormula::Atom(name))) << k.str();
        }
      }
      ASSERT_TRUE(RefutesAt(m, m.root, s)) << k.str();
    }
  }
}

TEST(Desequentize, WorkedExample) {
  StandardSequent s = Standardize(B("Q -o ((Q -o R) -o R)")).sequent;
  AffineFormula d = Desequentize(s);
  AffineFormula expected = ParseAffineFormula(
      "!b(_w1 & Q -> R) & !b(_w2 & _w1 -> R) & !b(_w3 & Q -> _w2) &"
      " !b((!b Q -> R) -> _w1) & !b((!b _w1 -> R) -> _w2) &"
      " !b((!b Q -> _w2) -> _w3) -> _w3",
      true);
  EXPECT_EQ(d, expected) << d.str();
}

TEST(Desequentize, IntendedMeaningDiffersByPositiveRecurrences) {
  for (const auto& k : Corpus(ImpKind::kBimp, 71, 30)) {
    StandardSequent s = Standardize(k).sequent;
    AffineFormula im = IntendedMeaning(s);
    AffineFormula stripped = im;
    const auto paths = InsertedRecurrencePaths(s);
    ASSERT_EQ(paths.size(), 3 * s.s());
    for (auto it = paths.rbegin(); it != paths.rend(); ++it) {
      const AffineFormula& occ = SubformulaAt(stripped, *it);
      ASSERT_EQ(occ.op(), AffineOp::kBrecur) << PathString(*it);
      ASSERT_EQ(PolarityAt(stripped, *it), Polarity::kPositive);
      stripped = ReplaceAt(stripped, *it, occ.child(0));
    }
    EXPECT_EQ(stripped, Desequentize(s)) << k.str();
  }
}

TEST(Desequentize, ParallelFormReplacesNegativeRecurrences) {
  for (const auto& k : Corpus(ImpKind::kBimp, 73, 30)) {
    StandardSequent bs = Standardize(k, ImpKind::kBimp).sequent;
    StandardSequent ps = Standardize(k, ImpKind::kPimp).sequent;
    AffineFormula d = Desequentize(bs);
    const auto paths = RecurrencePaths(bs);
    ASSERT_EQ(paths.size(), 3 * bs.s());
    for (const auto& p : paths) {
      const AffineFormula& occ = SubformulaAt(d, p);
      ASSERT_EQ(occ.op(), AffineOp::kBrecur) << PathString(p);
      ASSERT_EQ(PolarityAt(d, p), Polarity::kNegative);
      d = ReplaceAt(d, p, AffineFormula::Precur(occ.child(0)));
    }
    EXPECT_EQ(d, Desequentize(ps)) << k.str();
  }
}

TEST(Elementarize, RoundTrip) {
  for (ImpKind kind : {ImpKind::kBimp, ImpKind::kPimp}) {
    for (const auto& k : Corpus(kind, 79, 40)) {
      StandardSequent s = Standardize(k).sequent;
      GameForm g = Elementarize(Desequentize(s), s.kind);
      EXPECT_EQ(g.sequent, s) << k.str();
      EXPECT_EQ(g.letters.size(), s.Atoms().size());
      for (const auto& a : s.Atoms()) EXPECT_EQ(g.Letter(a), "^" + a);
      nlohmann::json j = GameFormToJson(g);
      GameForm back = GameFormFromJson(j);
      EXPECT_EQ(back.sequent, s);
      EXPECT_EQ(GameFormToJson(back).dump(), j.dump());
    }
  }
}

TEST(Elementarize, ElementaryString) {
  GameForm g = MakeGameForm(B("P -o P"));
  EXPECT_EQ(g.ElementaryString(),
            "(!b ((Ux ^_w1(x) & Ux ^P(x)) -> Ux ^P(x)) & "
            "!b ((!b Ux ^P(x) -> Ux ^P(x)) -> Ux ^_w1(x))) -> Ux ^_w1(x)")
      << g.formula.str();
  EXPECT_THROW(g.Letter("Q"), std::out_of_range);
}

TEST(Elementarize, RejectsOtherShapes) {
  for (const char* text : {"P -> Q", "!b(P & Q -> R) -> W", "~P", "!b(P -> Q) & !b(P -> Q) -> W",
                           "!b(P & Q -> R) & !p((!p P -> Q) -> R) -> W"}) {
    EXPECT_THROW(Elementarize(ParseAffineFormula(text)), std::invalid_argument) << text;
  }
  nlohmann::json j = GameFormToJson(MakeGameForm(B("P -o Q")));
  j["s"] = 7;
  EXPECT_THROW(GameFormFromJson(j), std::invalid_argument);
}

void ExpectImplication(const AffineProof& p, const AffineFormula& a, const AffineFormula& b) {
  ASSERT_EQ(p->conclusion.size(), 1u);
  EXPECT_EQ(Expand(p->conclusion[0]), Expand(AffineFormula::Limp(a, b)))
      << p->conclusion[0].str();
}

TEST(DesequentizationProofs, CheckForBothKinds) {
  for (ImpKind kind : {ImpKind::kBimp, ImpKind::kPimp}) {
    auto ks = testing::RandomFormulas(kind == ImpKind::kBimp ? 83 : 89, 25,
                                      testing::DefaultAtoms(), 0, 4, kind);
    for (const auto& k : ks) {
      StandardSequent s = Standardize(k).sequent;
      DesequentizationProofs pr = BuildDesequentizationProofs(k);
      std::string why;
      ASSERT_TRUE(CheckAffine(pr.chain, &why)) << k.str() << ": " << why;
      ASSERT_TRUE(CheckAffine(pr.uncurried, &why)) << k.str() << ": " << why;
      ASSERT_TRUE(CheckAffine(pr.to_d, &why)) << k.str() << ": " << why;
      ExpectImplication(pr.chain, Recur(s.kind, Translate(k)), pr.split);
      ExpectImplication(pr.uncurried, pr.split, pr.intended);
      ExpectImplication(pr.to_d, pr.intended, Desequentize(s));
      EXPECT_EQ(pr.intended, IntendedMeaning(s));
    }
  }
}

TEST(DesequentizationProofs, WorkedExample) {
  IntFormula k = B("Q -o ((Q -o R) -o R)");
  DesequentizationProofs pr = BuildDesequentizationProofs(k);
  EXPECT_TRUE(CheckAffine(pr.chain));
  EXPECT_TRUE(ContainsCut(pr.chain));
  EXPECT_TRUE(CheckAffine(pr.to_d));
  EXPECT_EQ(pr.to_d->conclusion[0],
            AffineFormula::Limp(pr.intended, Desequentize(Standardize(k).sequent)));
}

}  // namespace
}  // namespace clint
