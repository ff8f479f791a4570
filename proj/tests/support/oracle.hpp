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

// Independent decision procedures used as test oracles.

#ifndef CLINT_TESTS_ORACLE_HPP_
#define CLINT_TESTS_ORACLE_HPP_

#include <vector>

#include <optional>

#include "clint/formula.hpp"
#include "clint/kripke.hpp"

namespace clint::testing {

// Contraction-free sequent calculus for the implicational fragment
// (Dyckhoff).  Terminates without loop checking.
bool LjtProvable(const IntSequent& s);

// Literal enumeration of tree models: shapes by world count (parent arrays),
// then monotone valuations over the sequent's atoms.  Returns the first model
// whose root refutes s.
std::optional<KripkeModel> BruteForceCountermodel(const IntSequent& s,
                                                  std::size_t max_worlds);

}  // namespace clint::testing

#endif  // CLINT_TESTS_ORACLE_HPP_
