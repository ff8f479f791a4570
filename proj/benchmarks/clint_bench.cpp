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

#include <random>

#include <benchmark/benchmark.h>

#include "clint/calculus.hpp"
#include "clint/interp.hpp"
#include "clint/kripke.hpp"
#include "clint/transform.hpp"

namespace clint {
namespace {

IntFormula Parse(const char* text) { return ParseIntFormula(text, ImpKind::kBimp); }

// A left-nested chain of n implications over three atoms.
IntFormula Chain(int n) {
  const char* atoms[] = {"P", "Q", "R"};
  IntFormula f = IntFormula::Atom("P");
  for (int i = 0; i < n; ++i) {
    f = IntFormula::Imp(ImpKind::kBimp, f, IntFormula::Atom(atoms[(i + 1) % 3]));
  }
  return f;
}

void BM_ProvePeirce(benchmark::State& state) {
  IntSequent s{{}, Parse("((P -o Q) -o P) -o P")};
  for (auto _ : state) benchmark::DoNotOptimize(IntProve(s));
}
BENCHMARK(BM_ProvePeirce);

void BM_ProveS(benchmark::State& state) {
  IntSequent s{{}, Parse("(P -o (Q -o R)) -o ((P -o Q) -o (P -o R))")};
  for (auto _ : state) benchmark::DoNotOptimize(IntProve(s));
}
BENCHMARK(BM_ProveS);

void BM_ProveChain(benchmark::State& state) {
  IntSequent s{{}, Chain(static_cast<int>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(IntProvable(s));
}
BENCHMARK(BM_ProveChain)->RangeMultiplier(2)->Range(2, 16);

void BM_CountermodelSearch(benchmark::State& state) {
  IntFormula f = Parse("((P -o Q) -o P) -o P");
  for (auto _ : state) {
    benchmark::DoNotOptimize(BoundedCountermodelSearch(f, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CountermodelSearch)->DenseRange(2, 4);

void BM_EmbedAndCheck(benchmark::State& state) {
  SearchOutcome o = IntProve(IntSequent{{}, Parse("(P -o (Q -o R)) -o ((P -o Q) -o (P -o R))")});
  for (auto _ : state) benchmark::DoNotOptimize(CheckAffine(Embed(*o.proof)));
}
BENCHMARK(BM_EmbedAndCheck);

void BM_MakeGameForm(benchmark::State& state) {
  IntFormula k = Chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(MakeGameForm(k));
}
BENCHMARK(BM_MakeGameForm)->RangeMultiplier(2)->Range(2, 16);

// One full play per iteration: schedule, dagger and verdict.
void BM_ScheduleSuite(benchmark::State& state) {
  GameForm g = MakeGameForm(Parse("((P -o Q) -o P) -o P"));
  auto suite = AdversarySuite();
  const auto& make = suite.at(static_cast<std::size_t>(state.range(0))).second;
  state.SetLabel(suite.at(static_cast<std::size_t>(state.range(0))).first);
  for (auto _ : state) {
    auto adv = make();
    BranchRecord r = Schedule(*adv, g, {});
    benchmark::DoNotOptimize(Verdict(r));
  }
}
BENCHMARK(BM_ScheduleSuite)->DenseRange(0, 7);

void BM_MasterChain(benchmark::State& state) {
  GameForm g = MakeGameForm(Chain(static_cast<int>(state.range(0))));
  auto adv = MakeWMatcher();
  BranchRecord r = Schedule(*adv, g, {});
  ResidualState st = Project(r.run, r.form);
  const std::size_t delta = r.delta.value_or(st.length());
  for (auto _ : state) benchmark::DoNotOptimize(FindMasterChain(st, delta));
}
BENCHMARK(BM_MasterChain)->DenseRange(2, 8, 2);

void BM_Copycat(benchmark::State& state) {
  for (auto _ : state) {
    auto adv = MakeRandomLegal(3, static_cast<std::size_t>(state.range(0)));
    CopycatRecord r = ScheduleCopycat(*adv, Label::kTop);
    benchmark::DoNotOptimize(CheckDelayMatching(r));
  }
}
BENCHMARK(BM_Copycat)->RangeMultiplier(4)->Range(4, 64);

}  // namespace
}  // namespace clint

BENCHMARK_MAIN();
