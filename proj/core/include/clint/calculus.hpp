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

// Proof objects for the implicational sequent calculus (two-sided, explicit
// structural rules) and for the one-sided affine calculus, with checkers,
// a decision procedure for the former and proof transformers into the latter.

#ifndef CLINT_CALCULUS_HPP_
#define CLINT_CALCULUS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clint/formula.hpp"

namespace clint {

//------------------------------------------------------------------------------
// Intuitionistic proofs
//
//   AXIOM        K => K
//   EXCHANGE i   G,E,F,H => K  /  G,F,E,H => K       (|G| = i)
//   WEAKENING    G => K        /  G,E => K
//   CONTRACTION  G,F,F => K    /  G,F => K
//   RIGHT_IMP    G,F => K      /  G => F o K
//   LEFT_IMP g   G,F => K1 ; H => K2  /  G,H,K2 o F => K1   (|G| = g)

enum class IntRule {
  kAxiom,
  kExchange,
  kWeakening,
  kContraction,
  kRightImp,
  kLeftImp,
};

const char* IntRuleName(IntRule rule);
IntRule ParseIntRule(const std::string& name);

struct IntProofNode;
using IntProof = std::shared_ptr<const IntProofNode>;

struct IntProofNode {
  IntSequent conclusion;
  IntRule rule;
  std::vector<std::size_t> indices;
  std::vector<IntProof> premises;
};

IntProof MakeIntProof(IntSequent conclusion, IntRule rule,
                      std::vector<std::size_t> indices,
                      std::vector<IntProof> premises);

// Reasons are appended to *why when non-null.
bool CheckInt(const IntProof& proof, std::string* why = nullptr);
std::size_t ProofSize(const IntProof& proof);

nlohmann::json IntProofToJson(const IntProof& proof);
IntProof IntProofFromJson(const nlohmann::json& j);

// One failed, saturated sequent per node.  The antecedent lists the saturated
// set in canonical order; the succedent is an atom.  Nodes form a rooted DAG
// (node 0 is the root); children[i] are strict supersets of node i's set.
struct TraceNode {
  IntSequent sequent;
  std::vector<std::size_t> children;
};

struct RefutationTrace {
  IntSequent root;  // the sequent that was searched
  std::vector<TraceNode> nodes;
};

nlohmann::json TraceToJson(const RefutationTrace& trace);

struct SearchOutcome {
  std::optional<IntProof> proof;
  std::optional<RefutationTrace> trace;
  bool proved() const { return proof.has_value(); }
};

// Backward search with antecedents as sets and ancestor loop checking.
SearchOutcome IntProve(const IntSequent& sequent);
// The same search without proof or trace construction.
bool IntProvable(const IntSequent& sequent);

//------------------------------------------------------------------------------
// Affine proofs
//
// The checker compares formulas modulo Expand, so ~E may be written for any E
// and E -> F stands for ~E | F.
//
//   AXIOM            ~E, E
//   EXCHANGE i       G,E,F,H  /  G,F,E,H               (|G| = i)
//   WEAKENING        G  /  G,E
//   UC_CONTR         G,?p E,?p E  /  G,?p E
//   WC_CONTR         G,?b E,?b E  /  G,?b E
//   PARDISJ_INTRO n  G,E1..En  /  G,E1|..|En
//   PARCONJ_INTRO    G1,E1 ; .. ; Gn,En  /  G1..Gn,E1&..&En
//   UC_INTRO         G,E  /  G,?p E
//   WC_INTRO         G,E  /  G,?b E
//   PRECUR_INTRO     ?p G,E  /  ?p G,!p E
//   BRECUR_INTRO     ?b G,E  /  ?b G,!b E
//   CUT              G,E ; ~E,H  /  G,H

enum class AffineRule {
  kAxiom,
  kExchange,
  kWeakening,
  kUcContr,
  kWcContr,
  kParDisjIntro,
  kParConjIntro,
  kUcIntro,
  kWcIntro,
  kPrecurIntro,
  kBrecurIntro,
  kCut,
};

const char* AffineRuleName(AffineRule rule);
AffineRule ParseAffineRule(const std::string& name);

struct AffineProofNode;
using AffineProof = std::shared_ptr<const AffineProofNode>;

struct AffineProofNode {
  AffineSequent conclusion;
  AffineRule rule;
  std::vector<std::size_t> indices;
  std::vector<AffineProof> premises;
  std::optional<AffineFormula> cut_formula;
};

AffineProof MakeAffineProof(AffineSequent conclusion, AffineRule rule,
                            std::vector<std::size_t> indices,
                            std::vector<AffineProof> premises,
                            std::optional<AffineFormula> cut_formula = {});

// Shared subproofs are checked once.
bool CheckAffine(const AffineProof& proof, std::string* why = nullptr);
// Distinct nodes, and nodes counted with multiplicity of sharing.
std::size_t AffineDagSize(const AffineProof& proof);
bool ContainsCut(const AffineProof& proof);

nlohmann::json AffineProofToJson(const AffineProof& proof);
AffineProof AffineProofFromJson(const nlohmann::json& j);

// Sequent-level helpers used by the transformers; all emit checkable steps.
namespace affine {

AffineProof Axiom(const AffineFormula& e);  // ~E, E
AffineProof Exchange(const AffineProof& p, std::size_t i);
AffineProof Weaken(const AffineProof& p, const AffineFormula& e);
AffineProof Contract(const AffineProof& p);  // last two, ?b or ?p
AffineProof DisjIntro(const AffineProof& p, std::size_t n,
                      std::optional<AffineFormula> written = {});
AffineProof ConjIntro(const std::vector<AffineProof>& premises,
                      std::optional<AffineFormula> written = {});
AffineProof CoIntro(const AffineProof& p, AffineOp co_op,
                    std::optional<AffineFormula> written = {});
AffineProof RecurIntro(const AffineProof& p, AffineOp op,
                       std::optional<AffineFormula> written = {});
AffineProof Cut(const AffineProof& left, const AffineProof& right);
// Moves position `from` to position `to` by adjacent exchanges.
AffineProof Move(const AffineProof& p, std::size_t from, std::size_t to);
// Exchanges only; target must be a permutation of the conclusion.
AffineProof Permute(const AffineProof& p, const AffineSequent& target);
// Contracts surplus ?-formulas, weakens in missing formulas, then permutes.
AffineProof Normalize(const AffineProof& p, const AffineSequent& target);

}  // namespace affine

// The one-sided translation of an intuitionistic sequent:
// <~!b G1', .., ~!b Gn', K'> (or !p for the parallel kind).
AffineSequent TranslateSequent(const IntSequent& s, ImpKind kind);

// The implication kind of a sequent; kBimp when it has no implication.
ImpKind SequentKind(const IntSequent& s);

// Cut-free translation of a checked intuitionistic proof.  Throws
// std::invalid_argument when CheckInt fails.
AffineProof Embed(const IntProof& proof);
AffineProof Embed(const IntProof& proof, ImpKind kind);

// ~!b E | E, i.e. !b E -> E (with !p for the parallel kind).
AffineProof DerelictionProof(ImpKind kind, const AffineFormula& e);

// <~T, !b K -> (!b G1 & .. & !b Gn -> W)> where T is the translation of
// K o (G1 o (.. (Gn o W)..)).  For n = 0 the second formula is !b K -> W;
// for n = 1 the inner conjunction is just !b G1.
AffineProof RecurrentSplitProof(ImpKind kind, const IntFormula& k,
                                const std::vector<IntFormula>& gs,
                                const IntFormula& w);

// Replacement of one occurrence.  pf proves the single formula G1 -> G2 (up to
// Expand).  Returns a proof of host1 -> host2 if the occurrence at path is
// positive and of host2 -> host1 otherwise, where host2 is host1 with the
// occurrence replaced by g2.  Throws std::invalid_argument on a bad path,
// mismatched occurrence or failing pf.
AffineProof ReplaceProof(const AffineFormula& g1, const AffineFormula& g2,
                         const AffineProof& pf, const AffineFormula& host1,
                         const Path& path);

// From proofs of A -> B and B -> C, a proof of A -> C (uses CUT).
AffineProof ComposeImplications(const AffineProof& ab, const AffineProof& bc);
// From a proof of the single formula A -> B (or ~A | B), a proof of <~A, B>.
AffineProof SplitImplication(const AffineProof& ab, const AffineFormula& a,
                             const AffineFormula& b);

}  // namespace clint

#endif  // CLINT_CALCULUS_HPP_
