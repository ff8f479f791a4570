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

// The counterstrategy machine E for game forms, the copycat machine C for
// !b G -> !p G, adversaries and the scheduler that plays them against each
// other.
//
// A schedule is a sequence of steps.  In every step the machine first makes
// its own moves and then grants permission once, so the number of grants
// equals the number of steps.

#ifndef CLINT_MACHINES_HPP_
#define CLINT_MACHINES_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "clint/gamecore.hpp"

namespace clint {

inline constexpr std::size_t kDefaultBudget = 10000;
// Grants >= steps / kFairness in every schedule.
inline constexpr std::size_t kFairness = 1;

class CopycatState;

// What an adversary sees when granted permission.  Moves carry the game's
// own labels; the adversary plays TOP in game forms and BOT in copycat games.
struct Observation {
  std::vector<std::pair<Label, std::string>> moves;
  std::size_t permissions = 0;  // grants so far, this one included
  const ResidualState* form = nullptr;
  const CopycatState* copycat = nullptr;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  // At most one move, in text form.
  virtual std::optional<std::string> Step(const Observation& obs) = 0;
  // True once the adversary will never move again.
  virtual bool Exhausted(const Observation& obs) const = 0;
};

using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

// Never moves.
std::unique_ptr<Adversary> MakeIdle();
// Uniform among the legal patient moves, passing with probability 1/4;
// constants from the used ones plus one fresh.  Stops after max_moves moves.
std::unique_ptr<Adversary> MakeRandomLegal(std::uint64_t seed, std::size_t max_moves = 8);
// Devirginizes the first virgin positive molecule, in molecule order, whose
// type already has a devirginized negative molecule, copying its constant.
std::unique_ptr<Adversary> MakeGreedyMatcher(std::size_t max_moves = 64);
// Like the greedy matcher but takes [W] as soon as a negative molecule of
// W's type is devirginized.
std::unique_ptr<Adversary> MakeWMatcher(std::size_t max_moves = 64);

// Entries fire at the given permission ordinal (1-based) or the first grant
// after it.  In a template "{i}" is the constant of the i-th observed move,
// negative i counting from the end.
struct ScriptEntry {
  std::size_t trigger = 1;
  std::string move;
};
std::unique_ptr<Adversary> MakeScripted(std::string name, std::vector<ScriptEntry> script);

// {"kind": "idle" | "random" | "greedy" | "w-matcher" | "script", ...}
AdversaryFactory AdversaryFromJson(const nlohmann::json& j);

// Adversaries indexed by the valuation constant c.
class Registry {
 public:
  // Throws std::invalid_argument on a duplicate c.
  void Register(long c, AdversaryFactory factory);
  // The idle adversary when c is not registered.
  std::unique_ptr<Adversary> Lookup(long c) const;
  bool Contains(long c) const { return entries_.count(c) > 0; }
  std::vector<long> Keys() const;

  // {"entries": [{"c": 1, "adversary": {...}}]}
  static Registry FromJson(const nlohmann::json& j);

 private:
  std::map<long, AdversaryFactory> entries_;
};

// The bundled suite: idle, random-legal for seeds 1..5, greedy matcher and
// W matcher.
std::vector<std::pair<std::string, AdversaryFactory>> AdversarySuite();

enum class Phase { kFirst, kSecond, kThird };
const char* PhaseName(Phase p);

struct Valuation {
  long z = 1;
};

struct BranchRecord {
  explicit BranchRecord(GameForm f) : form(std::move(f)) {}

  GameForm form;
  Valuation valuation;
  Run run;        // TOP is the adversary
  Run epm_view;   // the same run as E sees it, its own moves labeled TOP
  std::vector<std::size_t> permission_steps;
  std::vector<std::pair<Phase, std::size_t>> phases;  // phase and entry step
  std::optional<std::size_t> delta;                    // run length on entering THIRD
  std::size_t steps = 0;
  bool quiescent = false;
  bool adversary_illegal = false;
  std::string illegal_reason;
  std::string adversary;

  bool is_long() const { return delta.has_value(); }
};

// Throws std::invalid_argument when budget < 1.
BranchRecord Schedule(Adversary& adversary, const GameForm& form, Valuation valuation,
                      std::size_t budget = kDefaultBudget);

nlohmann::json BranchRecordToJson(const BranchRecord& r);

// E one step at a time, for callers that play the adversary themselves.
// Each step is Work, which makes E's moves and grants permission, then
// Reply with the adversary's move or a pass.  Schedule is a loop over this.
class Engine {
 public:
  // Throws std::invalid_argument when budget < 1.
  Engine(const GameForm& form, Valuation valuation, std::string adversary,
         std::size_t budget = kDefaultBudget);

  bool CanWork() const;
  // Returns the number of moves made.  Throws std::logic_error unless CanWork.
  std::size_t Work();
  bool granted() const { return granted_; }
  Observation Observe() const;

  std::optional<std::string> WhyIllegal(const std::string& move) const;
  // Ends the step.  An illegal move flags the record and returns false.
  bool Reply(const std::optional<std::string>& move);
  void Fail(const std::string& reason);

  // The last step passed, emitted nothing and did not start in FIRST.
  bool MayQuiesce() const;
  void Quiesce();

  const BranchRecord& record() const { return record_; }
  const ResidualState& state() const { return state_; }
  Phase phase() const { return phase_; }
  std::size_t step() const { return step_; }
  std::size_t budget() const { return budget_; }

 private:
  void Emit(const MoleculeId& id);
  std::vector<MoleculeId> Virgin(bool rz) const;

  BranchRecord record_;
  ResidualState state_;
  std::size_t budget_;
  std::size_t step_ = 0;
  Phase phase_ = Phase::kFirst;
  Phase at_start_ = Phase::kFirst;
  std::size_t emitted_ = 0;
  bool granted_ = false;
  bool last_passed_ = false;
};

// --- copycat -------------------------------------------------------------

// The game !b G -> !p G with G = Ux ^G(x) when the chooser is TOP and
// Ax ^G(x) when it is BOT.  Moves: "1.w:" replicates antecedent leaf w,
// "1.v.a" chooses a at antecedent node v, "2.k.a" chooses a in conjunct k.
// The machine plays TOP.
class CopycatState {
 public:
  explicit CopycatState(Label chooser) : chooser_(chooser) {}

  Label chooser() const { return chooser_; }
  std::optional<std::string> WhyIllegal(Label label, const std::string& move) const;
  void Apply(Label label, const std::string& move);  // throws std::invalid_argument

  const std::set<Bits>& nodes() const { return nodes_; }
  std::vector<Bits> Leaves() const;
  // Choice reaching leaf w, if any.
  std::optional<long> LeafChoice(const Bits& w) const;
  std::optional<long> ConjunctChoice(std::size_t k) const;
  const std::map<std::size_t, long>& conjunct_choices() const { return conjuncts_; }
  const std::set<long>& used_constants() const { return used_; }
  // Patient moves for label, "{a}" for the constant; conjuncts up to limit.
  std::vector<std::string> LegalMoveTemplates(Label label, std::size_t limit) const;

 private:
  Label chooser_;
  std::set<Bits> nodes_{""};
  std::map<Bits, long> leaf_choice_;
  std::map<std::size_t, long> conjuncts_;
  std::set<long> used_;
};

struct CopyMove {
  Label label = Label::kTop;
  std::string move;
  std::size_t step = 0;
  friend bool operator==(const CopyMove&, const CopyMove&) = default;
};

struct CopycatRecord {
  Label chooser = Label::kTop;
  std::vector<CopyMove> run;  // BOT is the adversary
  std::vector<std::size_t> permission_steps;
  std::size_t iterations = 0;  // conjuncts 1..iterations are active
  std::size_t steps = 0;
  // The adversary is done and every later iteration would only replicate,
  // or repeat the same catch-up from a choice above the reserved leaf.
  bool quiescent = false;
  bool adversary_illegal = false;
  std::string illegal_reason;
};

CopycatRecord ScheduleCopycat(Adversary& adversary, Label chooser,
                              std::size_t budget = kDefaultBudget);
CopycatState ProjectCopycat(const CopycatRecord& r);

// Conjunct k is paired with antecedent leaf 0^(k-1)1; both carry the same
// choice and the copy never precedes the original.  Returns the first
// violation.
std::optional<std::string> CheckDelayMatching(const CopycatRecord& r);
// Truth of !b G -> !p G.  Conjuncts past the active ones would be caught up
// from leaf 0^K, so they count as one more conjunct with that leaf's run.
Label EvalCopycat(const CopycatRecord& r, const std::function<bool(long)>& truth);

nlohmann::json CopycatRecordToJson(const CopycatRecord& r);

}  // namespace clint

#endif  // CLINT_MACHINES_HPP_
