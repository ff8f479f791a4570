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

#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace clint::testing {

namespace {

using Ctx = std::vector<IntFormula>;

std::string KeyOf(Ctx ctx, const IntFormula& goal) {
  std::sort(ctx.begin(), ctx.end(), CanonicalLess);
  std::string key;
  for (const auto& f : ctx) key += f.str() + ";";
  return key + "=>" + goal.str();
}

bool Ljt(Ctx ctx, const IntFormula& goal, std::map<std::string, bool>& memo) {
  std::string key = KeyOf(ctx, goal);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool result = false;
  if (std::find(ctx.begin(), ctx.end(), goal) != ctx.end()) {
    result = true;
  } else if (!goal.is_atom()) {
    Ctx next = ctx;
    next.push_back(goal.left());
    result = Ljt(next, goal.right(), memo);
  } else {
    for (std::size_t i = 0; i < ctx.size() && !result; ++i) {
      const IntFormula& f = ctx[i];
      if (f.is_atom()) continue;
      Ctx rest = ctx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      const IntFormula& a = f.left();
      const IntFormula& b = f.right();
      if (a.is_atom()) {
        if (std::find(rest.begin(), rest.end(), a) == rest.end()) continue;
        Ctx next = rest;
        next.push_back(b);
        result = Ljt(next, goal, memo);
      } else {
        // (C > D) > B
        Ctx first = rest;
        first.push_back(IntFormula::Imp(f.kind(), a.right(), b));
        if (!Ljt(first, a, memo)) continue;
        Ctx second = rest;
        second.push_back(b);
        result = Ljt(second, goal, memo);
      }
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool LjtProvable(const IntSequent& s) {
  std::map<std::string, bool> memo;
  return Ljt(s.antecedent, s.succedent, memo);
}

namespace {

bool Forces(const std::vector<std::size_t>& parent,
            const std::vector<unsigned>& val,
            const std::vector<std::string>& atoms, std::size_t w,
            const IntFormula& f) {
  if (f.is_atom()) {
    auto it = std::find(atoms.begin(), atoms.end(), f.name());
    return (val[w] >> (it - atoms.begin())) & 1u;
  }
  // Descendants of w are the worlds whose parent chain reaches w.
  for (std::size_t q = 0; q < parent.size(); ++q) {
    std::size_t a = q;
    while (a != w && a != 0) a = parent[a];
    if (a != w) continue;
    if (Forces(parent, val, atoms, q, f.left()) &&
        !Forces(parent, val, atoms, q, f.right())) {
      return false;
    }
  }
  return true;
}

bool NextShape(std::vector<std::size_t>& parent) {
  for (std::size_t i = parent.size(); i-- > 1;) {
    if (parent[i] + 1 < i) {
      ++parent[i];
      for (std::size_t j = i + 1; j < parent.size(); ++j) parent[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<KripkeModel> BruteForceCountermodel(const IntSequent& s,
                                                  std::size_t max_worlds) {
  std::vector<std::string> atoms;
  for (const auto& g : s.antecedent) {
    for (const auto& a : AtomsOf(g)) atoms.push_back(a);
  }
  for (const auto& a : AtomsOf(s.succedent)) atoms.push_back(a);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  const unsigned full = (1u << atoms.size()) - 1;

  for (std::size_t n = 1; n <= max_worlds; ++n) {
    std::vector<std::size_t> parent(n, 0);
    do {
      std::vector<unsigned> val(n, 0);
      while (true) {
        bool monotone = true;
        for (std::size_t i = 1; i < n && monotone; ++i) {
          monotone = (val[parent[i]] & ~val[i]) == 0;
        }
        if (monotone) {
          bool refutes = !Forces(parent, val, atoms, 0, s.succedent);
          for (const auto& g : s.antecedent) {
            refutes = refutes && Forces(parent, val, atoms, 0, g);
          }
          if (refutes) {
            KripkeModel m;
            for (std::size_t i = 0; i < n; ++i) {
              std::set<std::string> v;
              for (std::size_t b = 0; b < atoms.size(); ++b) {
                if (val[i] >> b & 1u) v.insert(atoms[b]);
              }
              m.AddWorld(v);
            }
            for (std::size_t i = 1; i < n; ++i) m.access[parent[i]][i] = true;
            m.Close();
            return m;
          }
        }
        std::size_t k = 0;
        while (k < n && val[k] == full) val[k++] = 0;
        if (k == n) break;
        ++val[k];
      }
    } while (NextShape(parent));
  }
  return std::nullopt;
}

}  // namespace clint::testing
