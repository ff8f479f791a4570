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

// JSON reports shared by the command-line tool and the HTTP service.  Each
// report carries an "ok" field that decides the tool's exit code.

#ifndef CLINT_COMMANDS_HPP_
#define CLINT_COMMANDS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "clint/formula.hpp"
#include "clint/interp.hpp"
#include "clint/machines.hpp"

namespace clint {

// The kind is read off the arrows when not given: "->>" means pimp.
ImpKind GuessKind(std::string_view text);
// A formula or sequent.  Throws ParseError.
IntSequent ParseInput(std::string_view text, std::optional<ImpKind> kind);
// A single formula; a sequent G => K is read as G1 o .. o K.
IntFormula ParseFormulaInput(std::string_view text, std::optional<ImpKind> kind);

// {ok: provable, sequent, proof} or {ok: false, sequent, countermodel}.
nlohmann::json ProveReport(const IntSequent& s);
// Smallest countermodel with at most bound worlds; ok when one exists.
nlohmann::json CountermodelReport(const IntSequent& s, std::size_t bound);
// Standardization, desequentization and game form.
nlohmann::json TransformReport(const IntFormula& k);

// The game form a formula is played on.  Parallel formulas are played as
// their branching version; reduced_from records that.
struct PlayForm {
  IntFormula formula;
  GameForm form;
  std::optional<ImpKind> reduced_from;
};
PlayForm MakePlayForm(const IntFormula& k);

// Throws std::invalid_argument when k is provable.
void RequireRefuted(const IntFormula& k);
// {ok, dagger, verdict, master_chain} of a finished branch; ok means the
// branch is quiescent, legal and won by BOT.
nlohmann::json OutcomeReport(const BranchRecord& r);

// Throws std::invalid_argument when k is provable.  ok means the branch is
// quiescent, legal and won by BOT.
nlohmann::json SimulateReport(const IntFormula& k, const AdversaryFactory& adversary,
                              Valuation valuation, std::size_t budget);
// The star agreement check for every registered constant.  ok when all of
// them agree on BOT.
nlohmann::json StarCheckReport(const IntFormula& k, const Registry& registry,
                               std::size_t budget);

}  // namespace clint

#endif  // CLINT_COMMANDS_HPP_
