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

// Finite Kripke models for the implicational fragment.

#ifndef CLINT_KRIPKE_HPP_
#define CLINT_KRIPKE_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clint/calculus.hpp"
#include "clint/formula.hpp"

namespace clint {

// Worlds are 0..size()-1.  access[p][q] means pRq.
struct KripkeModel {
  std::vector<std::vector<bool>> access;
  std::vector<std::set<std::string>> val;
  std::size_t root = 0;

  std::size_t size() const { return val.size(); }

  // Adds a world with the given atoms; access is left empty.
  std::size_t AddWorld(std::set<std::string> atoms);
  // Reflexive-transitive closure of the current relation.
  void Close();
};

// Throws std::out_of_range for an unknown world.
bool Force(const KripkeModel& m, std::size_t world, const IntFormula& f);
// Every accessible world forcing all of s.antecedent forces s.succedent.
bool ForceSequent(const KripkeModel& m, std::size_t world, const IntSequent& s);
// The world itself forces s.antecedent and not s.succedent.
bool RefutesAt(const KripkeModel& m, std::size_t world, const IntSequent& s);

// Empty iff access is reflexive and transitive and val is monotone.
std::vector<std::string> Validate(const KripkeModel& m);

// Exact search over tree models with at most max_worlds worlds whose root
// forces s.antecedent and not s.succedent.  Among the smallest such models
// the result is the first in a fixed order, so the output is deterministic.
std::optional<KripkeModel> BoundedCountermodelSearch(const IntSequent& s,
                                                     std::size_t max_worlds);
std::optional<KripkeModel> BoundedCountermodelSearch(const IntFormula& f,
                                                     std::size_t max_worlds);

// Worlds are the trace nodes, val is the atoms of each saturated set and
// access is the reflexive-transitive closure of the child links.  Shared
// children make this a rooted partial order rather than a tree.
KripkeModel TraceModel(const RefutationTrace& trace);
// Tree unfolding of TraceModel along the child links.  Throws
// std::length_error past max_worlds.
KripkeModel CountermodelFromTrace(const RefutationTrace& trace,
                                  std::size_t max_worlds = 1 << 16);

// {root, worlds:[id], access:[[p,q]], val:{id:[atom]}}; access is listed in
// full (closed).  FromJson reads the same shape and does not close access.
nlohmann::json KripkeModelToJson(const KripkeModel& m);
KripkeModel KripkeModelFromJson(const nlohmann::json& j);

}  // namespace clint

#endif  // CLINT_KRIPKE_HPP_
