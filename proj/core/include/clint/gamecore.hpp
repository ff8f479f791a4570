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

// Runs of the elementary game form
//
//   !b(X1 & Y1 -> Z1) & .. & !b((!b P1 -> Q1) -> R1) & .. -> W
//
// with every atom A read as Ux ^A(x).  Conjuncts are numbered 1..2s, the
// first s being the X rows.  Moves:
//
//   2.a                    choose a in the consequent W
//   1.i.w:                 replicate leaf w of conjunct i's tree
//   1.i.w.1.1.a  1.i.w.1.2.a  1.i.w.2.a       X, Y, Z   (i <= s)
//   1.i.w.1.1.u:                              replicate inner leaf u (i > s)
//   1.i.w.1.1.u.a  1.i.w.1.2.a  1.i.w.2.a     P, Q, R   (i > s)
//
// Bitstrings are over {0,1} and the empty one is written "e".  The residual
// state is a pure fold of the run.

#ifndef CLINT_GAMECORE_HPP_
#define CLINT_GAMECORE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "clint/transform.hpp"

namespace clint {

enum class Label { kTop, kBot };
const char* LabelName(Label label);  // "TOP" / "BOT"
Label ParseLabel(std::string_view text);
inline Label Flip(Label label) { return label == Label::kTop ? Label::kBot : Label::kTop; }

// Declaration order is the fixed molecule order used for chains.
enum class Metatype { kP, kQ, kR, kX, kY, kZ, kW };
const char* MetatypeName(Metatype m);  // "P" .. "W"
// W, X, Y, Q are positive; P, R, Z negative.
bool IsPositive(Metatype m);
// The player who devirginizes molecules of this metatype.
inline Label Owner(Metatype m) { return IsPositive(m) ? Label::kTop : Label::kBot; }

// "" is the root.
using Bits = std::string;
std::string BitsString(const Bits& b);  // "e" for the root
Bits ParseBits(std::string_view text);  // throws std::invalid_argument
bool IsPrefix(const Bits& a, const Bits& b);
bool BitsLess(const Bits& a, const Bits& b);  // length, then binary

struct Move {
  enum class Kind { kChoice, kReplicate };
  Kind kind = Kind::kChoice;
  Metatype component = Metatype::kW;  // choices only
  std::size_t conjunct = 0;           // 1..2s; 0 for the consequent
  Bits w, u;
  bool inner = false;  // replication of an inner tree
  long constant = 0;   // choices only

  std::string str() const;
  friend bool operator==(const Move&, const Move&) = default;
};

// Conjunct numbers decide the row family, so s is needed.  Throws
// std::invalid_argument with the offending position.
Move ParseMove(std::string_view text, std::size_t s);

struct LabMove {
  Label label = Label::kTop;
  Move move;
  std::size_t step = 0;
  friend bool operator==(const LabMove&, const LabMove&) = default;
};
using Run = std::vector<LabMove>;

Run FlipLabels(const Run& run);
nlohmann::json RunToJson(const Run& run);  // [{label, move, step}]
Run RunFromJson(const nlohmann::json& j, std::size_t s);

struct MoleculeId {
  Metatype metatype = Metatype::kW;
  std::size_t j = 0;  // row, 1-based; 0 for [W]
  Bits w, u;

  std::string str() const;  // "[W]", "[X1]^0", "[P2]^e_01"
  friend bool operator==(const MoleculeId&, const MoleculeId&) = default;
  friend bool operator<(const MoleculeId& a, const MoleculeId& b);
};

// A constant atomic formula ^A(a).
struct Token {
  std::string letter;
  long constant = 0;
  std::string str() const;  // "^A(5)"
  friend bool operator==(const Token&, const Token&) = default;
  friend bool operator<(const Token& a, const Token& b);
};

struct Devirginization {
  long constant = 0;
  std::size_t time = 0;    // length of the position of devirginization
  std::size_t origin = 0;  // run index of the devirginizing move
  MoleculeId essence;
};

struct Molecule {
  MoleculeId id;
  std::string atom;  // the type
  std::optional<Devirginization> state;

  bool positive() const { return IsPositive(id.metatype); }
  bool devirginized() const { return state.has_value(); }
};

// A molecule at the moment it was devirginized without a devirginized
// predecessor.  For [Z] and [R] ones, premises are the essences of the
// devirginized [X]/[Y] (resp. [Q]) molecules at the same leaf at that time.
struct Supermolecule {
  MoleculeId id;
  Token content;
  std::size_t time = 0;
  std::size_t origin = 0;
  std::vector<MoleculeId> premises;
};

class ResidualState {
 public:
  explicit ResidualState(GameForm form);

  const GameForm& form() const { return form_; }
  std::size_t s() const { return form_.sequent.s(); }
  std::size_t length() const { return length_; }

  // Empty when lm is legal here, else the reason.
  std::optional<std::string> WhyIllegal(const LabMove& lm) const;
  // Throws std::invalid_argument with the reason when illegal.
  void Apply(const LabMove& lm);

  // Current molecules in molecule order.
  std::vector<Molecule> Molecules() const;
  std::optional<Molecule> Find(const MoleculeId& id) const;
  const std::set<Bits>& OuterTree(std::size_t conjunct) const;  // 1..2s
  std::set<Bits> InnerTree(std::size_t conjunct, const Bits& w) const;

  const std::vector<Supermolecule>& supermolecules() const { return supers_; }
  const std::set<long>& used_constants() const { return used_; }
  // Whether some devirginized molecule of the given polarity has content t.
  bool HasContent(bool positive, const Token& t) const {
    return (positive ? positive_ : negative_).count(t) > 0;
  }

  const std::string& Letter(const Molecule& m) const;
  std::optional<Token> ContentToken(const Molecule& m) const;  // devirginized only
  // "Ux ^A(x)" when virgin, "^A(a)" otherwise.
  std::string Content(const Molecule& m) const;

 private:
  struct Leaf {
    std::optional<Devirginization> slot[3];  // X,Y,Z or Q,R,-
    std::set<Bits> inner{""};                // i > s
    std::map<Bits, std::optional<Devirginization>> p{{"", std::nullopt}};
  };
  struct Tree {
    std::set<Bits> nodes{""};
    std::map<Bits, Leaf> leaves{{"", Leaf{}}};
  };

  static int SlotOf(Metatype m);
  const std::string& AtomOf(Metatype m, std::size_t j) const;
  std::size_t RowOf(std::size_t conjunct) const;

  GameForm form_;
  std::vector<Tree> trees_;  // index conjunct - 1
  std::optional<Devirginization> w_;
  std::set<long> used_;
  std::size_t length_ = 0;
  std::vector<Supermolecule> supers_;
  std::set<Token> positive_, negative_;
};

// Thrown by Project; index is the first illegal labmove.
class IllegalRun : public std::invalid_argument {
 public:
  IllegalRun(const std::string& why, std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

bool Legal(const ResidualState& state, const LabMove& lm);
ResidualState Project(const Run& run, const GameForm& form);
// Folds further labmoves into a copy of state.
ResidualState Fold(ResidualState state, const Run& more);

bool MatchinglyDevirginized(const ResidualState& state, const MoleculeId& id);
long FreshChoiceConstant(const ResidualState& state);

// Moves available to label in state, with "{a}" standing for the choice
// constant.  Complete for patient moves; impatient ones (at internal nodes)
// are legal too but not listed.
std::vector<std::string> LegalMoveTemplates(const ResidualState& state, Label label);

// Supermolecules devirginized within the first delta labmoves.
std::vector<Supermolecule> Ogsms(const ResidualState& state, std::size_t delta);
// Checks the chain conditions over the OGSMs for delta; odd positions are
// negative and even ones positive.
bool IsChain(const ResidualState& state, std::size_t delta,
             const std::vector<MoleculeId>& chain, std::string* why = nullptr);
bool IsOpenChain(const ResidualState& state, std::size_t delta,
                 const std::vector<MoleculeId>& chain);
// Least open chain ending at [W] by (length, elementwise molecule order).
std::optional<std::vector<MoleculeId>> FindMasterChain(const ResidualState& state,
                                                       std::size_t delta);
// Atoms P_j with an open chain from a [P_j]-metatype OGSM to m.
std::set<std::string> Base(const ResidualState& state, std::size_t delta,
                           const MoleculeId& m);

// Truth of the whole form in the current state, with virgin molecules false
// and devirginized ones as truth says of their content.
Label Eval(const ResidualState& state, const std::function<bool(const Token&)>& truth);

nlohmann::json MoleculeToJson(const ResidualState& state, const Molecule& m);
// Trees, molecule ledger and supermolecules.
nlohmann::json StateToJson(const ResidualState& state);

}  // namespace clint

#endif  // CLINT_GAMECORE_HPP_
