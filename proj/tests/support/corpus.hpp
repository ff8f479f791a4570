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

// Formula corpora shared by the tests, the acceptance suite and benchmarks.

#ifndef CLINT_TESTS_CORPUS_HPP_
#define CLINT_TESTS_CORPUS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clint/formula.hpp"

namespace clint::testing {

// Every formula over `atoms` with at most `max_imps` implications, ordered by
// implication count and then by construction order.
std::vector<IntFormula> EnumerateFormulas(const std::vector<std::string>& atoms,
                                          std::size_t max_imps, ImpKind kind);

// Uniform random split of the implication budget; atoms uniform.
IntFormula RandomFormula(std::mt19937_64& rng,
                         const std::vector<std::string>& atoms,
                         std::size_t imps, ImpKind kind);

std::vector<IntFormula> RandomFormulas(std::uint64_t seed, std::size_t count,
                                       const std::vector<std::string>& atoms,
                                       std::size_t min_imps,
                                       std::size_t max_imps, ImpKind kind);

// Random affine formula in the full connective set.
AffineFormula RandomAffine(std::mt19937_64& rng,
                           const std::vector<std::string>& atoms,
                           std::size_t depth);

inline const std::vector<std::string>& DefaultAtoms() {
  static const std::vector<std::string> atoms = {"P", "Q", "R"};
  return atoms;
}

}  // namespace clint::testing

#endif  // CLINT_TESTS_CORPUS_HPP_
