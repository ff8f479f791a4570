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

#include "clint/commands.hpp"

#include <stdexcept>

#include "clint/calculus.hpp"
#include "clint/kripke.hpp"
#include "clint/transform.hpp"

namespace clint {

ImpKind GuessKind(std::string_view text) {
  return text.find("->>") != std::string_view::npos ? ImpKind::kPimp : ImpKind::kBimp;
}

IntSequent ParseInput(std::string_view text, std::optional<ImpKind> kind) {
  return ParseIntInput(text, kind.value_or(GuessKind(text)));
}

IntFormula ParseFormulaInput(std::string_view text, std::optional<ImpKind> kind) {
  const ImpKind k = kind.value_or(GuessKind(text));
  IntSequent s = ParseIntInput(text, k);
  IntFormula out = s.succedent;
  for (auto it = s.antecedent.rbegin(); it != s.antecedent.rend(); ++it) {
    out = IntFormula::Imp(k, *it, out);
  }
  return out;
}

nlohmann::json ProveReport(const IntSequent& s) {
  SearchOutcome o = IntProve(s);
  nlohmann::json out{{"ok", o.proved()}, {"provable", o.proved()}, {"sequent", s.str()}};
  if (o.proved()) {
    out["proof"] = IntProofToJson(*o.proof);
  } else {
    out["countermodel"] = KripkeModelToJson(TraceModel(*o.trace));
  }
  return out;
}

nlohmann::json CountermodelReport(const IntSequent& s, std::size_t bound) {
  auto m = BoundedCountermodelSearch(s, bound);
  nlohmann::json out{{"ok", m.has_value()}, {"sequent", s.str()}, {"bound", bound}};
  out["countermodel"] = m ? KripkeModelToJson(*m) : nlohmann::json();
  return out;
}

nlohmann::json TransformReport(const IntFormula& k) {
  Standardization st = Standardize(k);
  nlohmann::json names = nlohmann::json::array();
  for (const auto& [f, name] : st.names.entries) {
    names.push_back({{"name", name}, {"formula", f.str()}});
  }
  GameForm g = Elementarize(Desequentize(st.sequent), st.sequent.kind);
  return {{"ok", true},
          {"formula", k.str()},
          {"standardization",
           {{"sequent", st.sequent.ToSequent().str()}, {"names", names}}},
          {"desequentization", g.formula.str()},
          {"game_form", GameFormToJson(g)}};
}

PlayForm MakePlayForm(const IntFormula& k) {
  if (k.is_atom() || HasUniformKind(k, ImpKind::kBimp)) return {k, MakeGameForm(k), std::nullopt};
  IntFormula b = WithKind(k, ImpKind::kBimp);
  return {b, MakeGameForm(b), k.kind()};
}

void RequireRefuted(const IntFormula& k) {
  if (IntProvable(IntSequent{{}, k})) {
    throw std::invalid_argument("formula is provable; there is no counterstrategy to run");
  }
}

namespace {

nlohmann::json ChainJson(const BranchRecord& r) {
  if (!r.is_long()) return nullptr;
  auto chain = FindMasterChain(Project(r.run, r.form), *r.delta);
  if (!chain) return nullptr;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& id : *chain) out.push_back(id.str());
  return out;
}

}  // namespace

nlohmann::json OutcomeReport(const BranchRecord& r) {
  nlohmann::json out{{"ok", false}, {"dagger", nullptr}, {"verdict", nullptr},
                     {"master_chain", nullptr}};
  if (r.adversary_illegal) {
    out["reason"] = "adversary made an illegal move";
    return out;
  }
  if (!r.quiescent) {
    out["reason"] = "budget exhausted before quiescence";
    return out;
  }
  PerfectInterpretation d = BuildDagger(r);
  Label v = Eval(Project(r.run, r.form), [&](const Token& t) { return d.Truth(t); });
  out["dagger"] = InterpretationToJson(d);
  out["verdict"] = LabelName(v);
  out["master_chain"] = ChainJson(r);
  out["ok"] = v == Label::kBot;
  return out;
}

nlohmann::json SimulateReport(const IntFormula& k, const AdversaryFactory& adversary,
                              Valuation valuation, std::size_t budget) {
  PlayForm pf = MakePlayForm(k);
  RequireRefuted(pf.formula);
  auto adv = adversary();
  BranchRecord r = Schedule(*adv, pf.form, valuation, budget);
  nlohmann::json out = OutcomeReport(r);
  out["formula"] = k.str();
  out["record"] = BranchRecordToJson(r);
  if (pf.reduced_from) out["reduced_from"] = ImpKindName(*pf.reduced_from);
  return out;
}

nlohmann::json StarCheckReport(const IntFormula& k, const Registry& registry,
                               std::size_t budget) {
  PlayForm pf = MakePlayForm(k);
  RequireRefuted(pf.formula);
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  for (long c : registry.Keys()) {
    StarAgreement a;
    try {
      a = CheckStarAgreement(pf.form, registry, c, budget);
    } catch (const std::invalid_argument& e) {
      // A branch that is cut off or illegal has no dagger.
      ok = false;
      rows.push_back({{"c", c}, {"error", e.what()}});
      continue;
    }
    ok = ok && a.agree() && a.via_dagger == Label::kBot;
    rows.push_back({{"c", c},
                    {"via_dagger", LabelName(a.via_dagger)},
                    {"via_star", LabelName(a.via_star)},
                    {"agree", a.agree()}});
  }
  nlohmann::json out{{"ok", ok}, {"formula", k.str()}, {"checks", rows}};
  if (pf.reduced_from) out["reduced_from"] = ImpKindName(*pf.reduced_from);
  return out;
}

}  // namespace clint
