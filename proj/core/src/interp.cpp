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

#include "clint/interp.hpp"

#include <algorithm>
#include <stdexcept>

#include "clint/calculus.hpp"

namespace clint {

nlohmann::json InterpretationToJson(const PerfectInterpretation& i) {
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& t : i.exceptions) ex.push_back({{"letter", t.letter}, {"constant", t.constant}});
  return {{"default", i.default_truth}, {"exceptions", ex}};
}

PerfectInterpretation InterpretationFromJson(const nlohmann::json& j) {
  PerfectInterpretation out;
  out.default_truth = j.at("default").get<bool>();
  for (const auto& e : j.at("exceptions")) {
    out.exceptions.insert({e.at("letter").get<std::string>(), e.at("constant").get<long>()});
  }
  return out;
}

namespace {

std::set<Token> NonMatchingPositive(const ResidualState& st) {
  std::set<Token> out;
  for (const auto& m : st.Molecules()) {
    if (m.positive() && m.state && !MatchinglyDevirginized(st, m.id)) {
      out.insert(*st.ContentToken(m));
    }
  }
  return out;
}

std::set<Token> ChainContents(const ResidualState& st, std::size_t delta) {
  auto chain = FindMasterChain(st, delta);
  if (!chain) throw InvariantViolation("INVARIANT_VIOLATION: LONG branch without a master chain");
  std::set<Token> out;
  for (const auto& sm : st.supermolecules()) {
    if (std::find(chain->begin(), chain->end(), sm.id) != chain->end()) out.insert(sm.content);
  }
  return out;
}

}  // namespace

PerfectInterpretation BuildDagger(const BranchRecord& r) {
  if (r.adversary_illegal) {
    throw std::invalid_argument("branch stopped on an illegal adversary move");
  }
  if (!r.quiescent) throw std::invalid_argument("branch is not quiescent");
  ResidualState st = Project(r.run, r.form);
  PerfectInterpretation out;
  out.exceptions = r.is_long() ? ChainContents(st, *r.delta) : NonMatchingPositive(st);
  return out;
}

Label Verdict(const BranchRecord& r) {
  PerfectInterpretation d = BuildDagger(r);
  return Eval(Project(r.run, r.form), [&](const Token& t) { return d.Truth(t); });
}

StarInterpretation::StarInterpretation(GameForm form, const Registry& registry,
                                       std::size_t budget)
    : form_(std::move(form)), registry_(registry), budget_(budget) {}

const BranchRecord& StarInterpretation::RecordAt(long c) {
  auto it = records_.find(c);
  if (it == records_.end()) {
    auto adv = registry_.Lookup(c);
    it = records_.emplace(c, Schedule(*adv, form_, Valuation{c}, budget_)).first;
  }
  return it->second;
}

const PerfectInterpretation& StarInterpretation::At(long c) {
  auto it = memo_.find(c);
  if (it == memo_.end()) it = memo_.emplace(c, BuildDagger(RecordAt(c))).first;
  return it->second;
}

StarAgreement CheckStarAgreement(const GameForm& form, const Registry& registry, long c,
                           std::size_t budget) {
  auto adv = registry.Lookup(c);
  BranchRecord r = Schedule(*adv, form, Valuation{c}, budget);
  ResidualState st = Project(r.run, form);
  PerfectInterpretation dagger = BuildDagger(r);
  StarInterpretation star(form, registry, budget);
  StarAgreement out;
  out.via_dagger = Eval(st, [&](const Token& t) { return dagger.Truth(t); });
  out.via_star = Eval(st, [&](const Token& t) { return star.Truth(t, c); });
  return out;
}

std::string Descriptor::str() const {
  switch (op) {
    case Op::kLeaf: return leaf;
    case Op::kNot: return "~" + children[0].str();
    default: {
      std::string out = "(";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += op == Op::kOr ? " | " : " & ";
        out += children[i].str();
      }
      return out + ")";
    }
  }
}

Descriptor ComplexityOf(const std::string&) {
  using Op = Descriptor::Op;
  Descriptor long_leaf{Op::kLeaf, "LONG", {}};
  Descriptor true_long{Op::kLeaf, "TRUE_LONG", {}};
  Descriptor false_short{Op::kLeaf, "FALSE_SHORT", {}};
  Descriptor left{Op::kAnd, "", {long_leaf, true_long}};
  Descriptor right{Op::kAnd, "", {Descriptor{Op::kNot, "", {long_leaf}},
                                  Descriptor{Op::kNot, "", {false_short}}}};
  return {Op::kOr, "", {left, right}};
}

std::string ClassOf(const Descriptor& d) {
  using Op = Descriptor::Op;
  if (d.op == Op::kLeaf) return "Sigma1";
  if (d.op == Op::kNot) {
    std::string c = ClassOf(d.children[0]);
    return c == "Sigma1" ? "Pi1" : c == "Pi1" ? "Sigma1" : c;
  }
  std::string c = ClassOf(d.children[0]);
  for (std::size_t i = 1; i < d.children.size(); ++i) {
    if (ClassOf(d.children[i]) != c) return "Delta2";
  }
  return c;
}

namespace {

// Searches the prefixes of r's run in order; stops at the first prefix on
// which found holds.
template <typename F>
bool ExistsPrefix(const BranchRecord& r, F found) {
  ResidualState st(r.form);
  if (found(st)) return true;
  for (const auto& lm : r.run) {
    st.Apply(lm);
    if (found(st)) return true;
  }
  return false;
}

bool WMatched(const ResidualState& st) {
  return MatchinglyDevirginized(st, {Metatype::kW, 0, {}, {}});
}

bool Leaf(const std::string& name, const BranchRecord& r, const Token& t) {
  if (name == "LONG") return ExistsPrefix(r, WMatched);
  if (name == "TRUE_LONG") {
    // The first prefix where [W] is matched fixes the OGSMs and the chain.
    bool answer = false;
    bool found = ExistsPrefix(r, [&](const ResidualState& st) {
      if (!WMatched(st)) return false;
      auto chain = FindMasterChain(st, st.length());
      answer = chain.has_value();
      for (const auto& sm : st.supermolecules()) {
        if (answer && sm.content == t &&
            std::find(chain->begin(), chain->end(), sm.id) != chain->end()) {
          answer = false;
        }
      }
      return true;
    });
    return found && answer;
  }
  if (name == "FALSE_SHORT") {
    return ExistsPrefix(r, [&](const ResidualState& st) {
      for (const auto& m : st.Molecules()) {
        if (m.positive() && m.state && *st.ContentToken(m) == t &&
            !MatchinglyDevirginized(st, m.id)) {
          return true;
        }
      }
      return false;
    });
  }
  throw std::invalid_argument("unknown descriptor leaf " + name);
}

}  // namespace

bool EvalDescriptor(const Descriptor& d, const BranchRecord& r, const Token& t) {
  using Op = Descriptor::Op;
  switch (d.op) {
    case Op::kLeaf: return Leaf(d.leaf, r, t);
    case Op::kNot: return !EvalDescriptor(d.children[0], r, t);
    case Op::kAnd:
      return std::all_of(d.children.begin(), d.children.end(),
                         [&](const Descriptor& c) { return EvalDescriptor(c, r, t); });
    case Op::kOr:
      return std::any_of(d.children.begin(), d.children.end(),
                         [&](const Descriptor& c) { return EvalDescriptor(c, r, t); });
  }
  return false;
}

nlohmann::json DescriptorToJson(const Descriptor& d) {
  using Op = Descriptor::Op;
  if (d.op == Op::kLeaf) return {{"leaf", d.leaf}, {"class", "Sigma1"}};
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : d.children) kids.push_back(DescriptorToJson(c));
  const char* op = d.op == Op::kOr ? "or" : d.op == Op::kAnd ? "and" : "not";
  return {{"op", op}, {"class", ClassOf(d)}, {"children", kids}};
}

std::vector<std::string> CheckBaseForcing(const BranchRecord& r, const KripkeModel& m) {
  std::vector<std::string> out;
  ResidualState st = Project(r.run, r.form);
  const std::size_t delta = r.delta.value_or(st.length());
  for (const auto& sm : Ogsms(st, delta)) {
    if (IsPositive(sm.id.metatype)) continue;
    // The supermolecule may have been replicated away, so read its type off
    // the row.
    std::string atom;
    const auto& rows = r.form.sequent.rows;
    switch (sm.id.metatype) {
      case Metatype::kP: atom = rows.at(sm.id.j - 1).p; break;
      case Metatype::kR: atom = rows.at(sm.id.j - 1).r; break;
      default: atom = rows.at(sm.id.j - 1).z; break;
    }
    std::set<std::string> base = Base(st, delta, sm.id);
    for (std::size_t p = 0; p < m.size(); ++p) {
      bool forces_base = std::all_of(base.begin(), base.end(),
                                     [&](const std::string& a) { return m.val[p].count(a) > 0; });
      if (forces_base && !m.val[p].count(atom)) {
        out.push_back(sm.id.str() + ": world " + std::to_string(p) + " forces its base but not " + atom);
      }
    }
  }
  return out;
}

KripkeModel StandardCountermodel(const GameForm& form) {
  SearchOutcome o = IntProve(form.sequent.ToSequent());
  if (o.proved()) throw std::invalid_argument("the standard sequent is provable");
  return TraceModel(*o.trace);
}

}  // namespace clint
