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

// Interpretations read off scheduled branches.
//
// For a quiescent branch the dagger interpretation makes every ^A(a) true
// except:
//   SHORT  contents of positive molecules devirginized without a match
//   LONG   contents of the master chain
// The star interpretation collects these per valuation constant c, running
// the adversary registered for c.

#ifndef CLINT_INTERP_HPP_
#define CLINT_INTERP_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clint/kripke.hpp"
#include "clint/machines.hpp"

namespace clint {

struct PerfectInterpretation {
  bool default_truth = true;
  std::set<Token> exceptions;

  bool Truth(const Token& t) const { return default_truth != (exceptions.count(t) > 0); }
  friend bool operator==(const PerfectInterpretation&, const PerfectInterpretation&) = default;
};

// {default, exceptions: [{letter, constant}]}
nlohmann::json InterpretationToJson(const PerfectInterpretation& i);
PerfectInterpretation InterpretationFromJson(const nlohmann::json& j);

// Raised when a LONG branch has no master chain.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Throws std::invalid_argument for a branch that is not quiescent or stopped
// on an illegal adversary move.
PerfectInterpretation BuildDagger(const BranchRecord& r);

// The outcome of the branch under its own dagger interpretation.
Label Verdict(const BranchRecord& r);

class StarInterpretation {
 public:
  StarInterpretation(GameForm form, const Registry& registry,
                     std::size_t budget = kDefaultBudget);

  const BranchRecord& RecordAt(long c);
  const PerfectInterpretation& At(long c);
  bool Truth(const Token& t, long c) { return At(c).Truth(t); }
  const GameForm& form() const { return form_; }

 private:
  GameForm form_;
  const Registry& registry_;
  std::size_t budget_;
  std::map<long, BranchRecord> records_;
  std::map<long, PerfectInterpretation> memo_;
};

struct StarAgreement {
  Label via_dagger = Label::kTop;
  Label via_star = Label::kTop;
  bool agree() const { return via_dagger == via_star; }
};

// Evaluates the branch for c once under its dagger interpretation and once
// through a separately built star interpretation at c.
StarAgreement CheckStarAgreement(const GameForm& form, const Registry& registry, long c,
                           std::size_t budget = kDefaultBudget);

// Arithmetical shape of "^A(a) is true under the dagger for c":
//   (LONG & TRUE_LONG) | (~LONG & ~FALSE_SHORT)
// Every leaf is an existential search over prefixes of the branch.
struct Descriptor {
  enum class Op { kOr, kAnd, kNot, kLeaf };
  Op op = Op::kLeaf;
  std::string leaf;  // LONG, TRUE_LONG, FALSE_SHORT
  std::vector<Descriptor> children;

  std::string str() const;
};

Descriptor ComplexityOf(const std::string& atom);
// "Sigma1", "Pi1" or "Delta2".
std::string ClassOf(const Descriptor& d);
// Runs the leaves on the prefixes of r.
bool EvalDescriptor(const Descriptor& d, const BranchRecord& r, const Token& t);
nlohmann::json DescriptorToJson(const Descriptor& d);

// For every negative OGSM M of type A and every world forcing all of Base(M),
// the world forces A.  m must interpret the atoms of r's standard sequent.
// Returns the violations.
std::vector<std::string> CheckBaseForcing(const BranchRecord& r, const KripkeModel& m);

// A countermodel of the standard sequent of form, from the prover's trace.
// Throws std::invalid_argument when the sequent is provable.
KripkeModel StandardCountermodel(const GameForm& form);

}  // namespace clint

#endif  // CLINT_INTERP_HPP_
