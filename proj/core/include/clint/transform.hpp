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

// Flattening of an implicational formula into a standard sequent, the
// affine "desequentized" formula built from it, and the game form obtained
// by reading each atom A as the atom-game Ux ^A(x).

#ifndef CLINT_TRANSFORM_HPP_
#define CLINT_TRANSFORM_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clint/calculus.hpp"
#include "clint/formula.hpp"
#include "clint/kripke.hpp"

namespace clint {

// Row j contributes X o (Y o Z) and (P o Q) o R.
struct StandardRow {
  std::string x, y, z, p, q, r;
  friend bool operator==(const StandardRow&, const StandardRow&) = default;
};

struct StandardSequent {
  ImpKind kind = ImpKind::kBimp;
  std::vector<StandardRow> rows;
  std::string w;

  std::size_t s() const { return rows.size(); }
  // All X rows first, then all P rows.
  IntSequent ToSequent() const;
  std::vector<std::string> Atoms() const;  // sorted, distinct
  friend bool operator==(const StandardSequent&, const StandardSequent&) = default;
};

// Reads a sequent of the standard shape back into rows.
std::optional<StandardSequent> AsStandard(const IntSequent& s, ImpKind kind);

// Non-atomic subformulas in canonical order with their fresh names.
struct NameTable {
  std::vector<std::pair<IntFormula, std::string>> entries;
  // The atom naming f: f itself for atoms.  Throws std::out_of_range.
  std::string NameOf(const IntFormula& f) const;
};

struct Standardization {
  StandardSequent sequent;
  NameTable names;
};

// Fresh names are _w1, _w2, ... skipping any name occurring in k.  The kind
// is that of k (kBimp for an atom).
Standardization Standardize(const IntFormula& k);
Standardization Standardize(const IntFormula& k, ImpKind kind);

// !b(X & Y -> Z) & .. & !b((!b P -> Q) -> R) & .. -> W, with !p for the
// parallel kind; the bare atom W when s = 0.  For s = 1 the antecedent is a
// conjunction of the two row formulas.
AffineFormula Desequentize(const StandardSequent& s);
// The same with a recurrence also in front of every X, Y and (!P -> Q).
AffineFormula IntendedMeaning(const StandardSequent& s);

// Paths of the 3s recurrences that IntendedMeaning adds.
std::vector<Path> InsertedRecurrencePaths(const StandardSequent& s);
// Paths of the 3s recurrences of the desequentization: the 2s row
// recurrences and the s inner !P.  All are negative occurrences.
std::vector<Path> RecurrencePaths(const StandardSequent& s);

struct GameForm {
  StandardSequent sequent;
  AffineFormula formula;  // the desequentization
  std::map<std::string, std::string> letters;  // atom -> elementary letter

  const std::string& Letter(const std::string& atom) const;
  // The formula with every atom A printed as the atom-game "Ux ^A(x)".
  std::string ElementaryString() const;
};

// Throws std::invalid_argument when d does not have the template shape.  The
// kind is read off the recurrences; fallback is used when s = 0.
GameForm Elementarize(const AffineFormula& d, ImpKind fallback = ImpKind::kBimp);
GameForm MakeGameForm(const IntFormula& k);  // standardize, desequentize, elementarize

nlohmann::json GameFormToJson(const GameForm& g);
GameForm GameFormFromJson(const nlohmann::json& j);

// The naming model: m extended so that every fresh name is true exactly
// where the subformula it names is forced.
KripkeModel ExtendWithNames(const KripkeModel& m, const Standardization& st);

// Checkable affine proofs for the desequentization argument, with D the
// desequentization of the standard sequent G1..G2s => W of K:
//   chain      !K' -> split, by a cut between the embedding of a proof of
//              K o (G1 o .. (G2s o W)) and RecurrentSplitProof
//   uncurried  split -> intended, where split is !G1' & .. & !G2s' -> W and
//              intended is IntendedMeaning
//   to_d       intended -> D, by 3s single-occurrence derelictions
// For s = 0, uncurried and to_d are proofs of W -> W.
struct DesequentizationProofs {
  AffineProof chain;
  AffineProof uncurried;
  AffineProof to_d;
  AffineFormula split, intended;
};
DesequentizationProofs BuildDesequentizationProofs(const IntFormula& k);

}  // namespace clint

#endif  // CLINT_TRANSFORM_HPP_
