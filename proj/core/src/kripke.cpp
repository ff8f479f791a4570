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

#include "clint/kripke.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace clint {

std::size_t KripkeModel::AddWorld(std::set<std::string> atoms) {
  for (auto& row : access) row.push_back(false);
  val.push_back(std::move(atoms));
  access.emplace_back(val.size(), false);
  return val.size() - 1;
}

void KripkeModel::Close() {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) access[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!access[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (access[k][j]) access[i][j] = true;
      }
    }
  }
}

namespace {

// forced[f][w] for every subformula f, computed bottom-up.
class ForcingTable {
 public:
  ForcingTable(const KripkeModel& m, const std::vector<IntFormula>& roots) : m_(m) {
    for (const auto& r : roots) Eval(r);
  }

  const std::vector<bool>& Eval(const IntFormula& f) {
    auto it = table_.find(f.str());
    if (it != table_.end()) return it->second;
    const std::size_t n = m_.size();
    std::vector<bool> row(n, false);
    if (f.is_atom()) {
      for (std::size_t w = 0; w < n; ++w) row[w] = m_.val[w].count(f.name()) > 0;
    } else {
      std::vector<bool> l = Eval(f.left());
      std::vector<bool> r = Eval(f.right());
      for (std::size_t w = 0; w < n; ++w) {
        bool ok = true;
        for (std::size_t q = 0; q < n && ok; ++q) {
          if (m_.access[w][q] && l[q] && !r[q]) ok = false;
        }
        row[w] = ok;
      }
    }
    return table_.emplace(f.str(), std::move(row)).first->second;
  }

 private:
  const KripkeModel& m_;
  std::unordered_map<std::string, std::vector<bool>> table_;
};

void CheckWorld(const KripkeModel& m, std::size_t world) {
  if (world >= m.size()) throw std::out_of_range("unknown world");
}

}  // namespace

bool Force(const KripkeModel& m, std::size_t world, const IntFormula& f) {
  CheckWorld(m, world);
  ForcingTable t(m, {f});
  return t.Eval(f)[world];
}

bool ForceSequent(const KripkeModel& m, std::size_t world, const IntSequent& s) {
  CheckWorld(m, world);
  std::vector<IntFormula> all = s.antecedent;
  all.push_back(s.succedent);
  ForcingTable t(m, all);
  for (std::size_t q = 0; q < m.size(); ++q) {
    if (!m.access[world][q]) continue;
    bool ante = std::all_of(s.antecedent.begin(), s.antecedent.end(),
                            [&](const IntFormula& g) { return t.Eval(g)[q]; });
    if (ante && !t.Eval(s.succedent)[q]) return false;
  }
  return true;
}

bool RefutesAt(const KripkeModel& m, std::size_t world, const IntSequent& s) {
  CheckWorld(m, world);
  for (const auto& g : s.antecedent) {
    if (!Force(m, world, g)) return false;
  }
  return !Force(m, world, s.succedent);
}

std::vector<std::string> Validate(const KripkeModel& m) {
  std::vector<std::string> out;
  const std::size_t n = m.size();
  if (m.access.size() != n) {
    out.push_back("access has " + std::to_string(m.access.size()) + " rows for " +
                  std::to_string(n) + " worlds");
    return out;
  }
  auto w = [](std::size_t i) { return "w" + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) {
    if (!m.access[i][i]) out.push_back("not reflexive at " + w(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !m.access[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (j != k && m.access[j][k] && !m.access[i][k]) {
          out.push_back("not transitive: " + w(i) + " R " + w(j) + " R " + w(k));
        }
      }
      for (const auto& a : m.val[i]) {
        if (!m.val[j].count(a)) {
          out.push_back("not monotone: " + a + " at " + w(i) + ", missing at " + w(j));
        }
      }
    }
  }
  return out;
}

//------------------------------------------------------------------------------
// Bounded search.  The root type (the set of subformulas forced at the root)
// of a tree depends only on the root valuation and, for implications, on
// which of them every child forces.  Minimal tree sizes per type are found
// by a fixpoint over child summaries.

namespace {

using Type = std::string;  // '0'/'1' per universe index

struct Summary {
  Type imps;   // implications forced by every child ('1' if no children)
  Type atoms;  // atoms true at every child
  bool operator<(const Summary& o) const {
    return std::tie(imps, atoms) < std::tie(o.imps, o.atoms);
  }
};

struct SummaryWitness {
  std::size_t cost;
  std::vector<Type> children;
};

struct TypeWitness {
  std::size_t size;
  std::set<std::string> val;
  Summary summary;
};

class TreeSearch {
 public:
  TreeSearch(const IntSequent& s, std::size_t bound) : s_(s), bound_(bound) {
    std::vector<IntFormula> all;
    for (const auto& g : s.antecedent) {
      auto sub = Subformulas(g);
      all.insert(all.end(), sub.begin(), sub.end());
    }
    auto sub = Subformulas(s.succedent);
    all.insert(all.end(), sub.begin(), sub.end());
    universe_ = CanonicalOrder(all);
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      index_.emplace(universe_[i].str(), i);
      if (universe_[i].is_atom()) atom_ids_.push_back(i);
    }
  }

  std::optional<KripkeModel> Run() {
    if (bound_ == 0) return std::nullopt;
    Type all(universe_.size(), '1');
    summaries_[Summary{all, all}] = SummaryWitness{0, {}};
    for (bool changed = true; changed;) {
      changed = false;
      // Root types from every summary and admissible valuation.
      for (const auto& [sum, sw] : summaries_) {
        std::size_t size = sw.cost + 1;
        if (size > bound_) continue;
        std::vector<std::size_t> allowed;
        for (std::size_t a : atom_ids_) {
          if (sum.atoms[a] == '1') allowed.push_back(a);
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << allowed.size()); ++mask) {
          std::set<std::string> val;
          for (std::size_t b = 0; b < allowed.size(); ++b) {
            if (mask >> b & 1) val.insert(universe_[allowed[b]].name());
          }
          Type t = RootType(val, sum.imps);
          auto it = types_.find(t);
          if (it == types_.end() || it->second.size > size) {
            types_[t] = TypeWitness{size, val, sum};
            changed = true;
          }
        }
      }
      // Child summaries from nonempty sets of known types.
      for (const auto& [t, tw] : types_) {
        std::vector<std::pair<Summary, SummaryWitness>> fresh;
        Summary single{Project(t, false), Project(t, true)};
        fresh.push_back({single, SummaryWitness{tw.size, {t}}});
        for (const auto& [sum, sw] : summaries_) {
          if (sw.children.empty()) continue;
          if (std::find(sw.children.begin(), sw.children.end(), t) != sw.children.end()) {
            continue;
          }
          Summary merged{Meet(sum.imps, single.imps), Meet(sum.atoms, single.atoms)};
          SummaryWitness w{sw.cost + tw.size, sw.children};
          w.children.push_back(t);
          fresh.push_back({merged, w});
        }
        for (auto& [sum, w] : fresh) {
          if (w.cost + 1 > bound_) continue;
          auto it = summaries_.find(sum);
          if (it == summaries_.end() || it->second.cost > w.cost) {
            summaries_[sum] = std::move(w);
            changed = true;
          }
        }
      }
    }

    const Type* best = nullptr;
    std::size_t best_size = 0;
    for (const auto& [t, tw] : types_) {
      if (!Refutes(t)) continue;
      if (best == nullptr || tw.size < best_size) {
        best = &t;
        best_size = tw.size;
      }
    }
    if (best == nullptr) return std::nullopt;
    KripkeModel m;
    Build(*best, m);
    m.Close();
    return m;
  }

 private:
  Type RootType(const std::set<std::string>& val, const Type& child_imps) const {
    Type t(universe_.size(), '0');
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      const IntFormula& f = universe_[i];
      if (f.is_atom()) {
        t[i] = val.count(f.name()) ? '1' : '0';
      } else {
        bool here = t[index_.at(f.left().str())] == '0' ||
                    t[index_.at(f.right().str())] == '1';
        t[i] = here && child_imps[i] == '1' ? '1' : '0';
      }
    }
    return t;
  }

  Type Project(const Type& t, bool atoms) const {
    Type out(universe_.size(), '1');
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (universe_[i].is_atom() == atoms) out[i] = t[i];
    }
    return out;
  }

  static Type Meet(const Type& a, const Type& b) {
    Type out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b[i] == '0') out[i] = '0';
    }
    return out;
  }

  bool Refutes(const Type& t) const {
    for (const auto& g : s_.antecedent) {
      if (t[index_.at(g.str())] == '0') return false;
    }
    return t[index_.at(s_.succedent.str())] == '0';
  }

  std::size_t Build(const Type& t, KripkeModel& m) const {
    const TypeWitness& tw = types_.at(t);
    std::size_t w = m.AddWorld(tw.val);
    const SummaryWitness& sw = summaries_.at(tw.summary);
    for (const auto& c : sw.children) {
      std::size_t cw = Build(c, m);
      m.access[w][cw] = true;
    }
    return w;
  }

  const IntSequent& s_;
  std::size_t bound_;
  std::vector<IntFormula> universe_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> atom_ids_;
  std::map<Type, TypeWitness> types_;
  std::map<Summary, SummaryWitness> summaries_;
};

}  // namespace

std::optional<KripkeModel> BoundedCountermodelSearch(const IntSequent& s,
                                                     std::size_t max_worlds) {
  return TreeSearch(s, max_worlds).Run();
}

std::optional<KripkeModel> BoundedCountermodelSearch(const IntFormula& f,
                                                     std::size_t max_worlds) {
  return BoundedCountermodelSearch(IntSequent{{}, f}, max_worlds);
}

//------------------------------------------------------------------------------
// Models from refutation traces

namespace {

std::set<std::string> AtomsIn(const IntSequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.antecedent) {
    if (f.is_atom()) out.insert(f.name());
  }
  return out;
}

}  // namespace

KripkeModel TraceModel(const RefutationTrace& trace) {
  if (trace.nodes.empty()) throw std::invalid_argument("empty trace");
  KripkeModel m;
  for (const auto& n : trace.nodes) m.AddWorld(AtomsIn(n.sequent));
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    for (std::size_t c : trace.nodes[i].children) {
      if (c >= trace.nodes.size()) throw std::invalid_argument("bad child index");
      m.access[i][c] = true;
    }
  }
  m.Close();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m.access[i][j] && m.access[j][i]) {
        throw std::invalid_argument("trace has a cycle");
      }
    }
  }
  return m;
}

KripkeModel CountermodelFromTrace(const RefutationTrace& trace,
                                  std::size_t max_worlds) {
  TraceModel(trace);  // validates shape
  KripkeModel m;
  std::vector<std::size_t> parent;
  // (trace node, tree parent)
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, SIZE_MAX}};
  while (!stack.empty()) {
    auto [node, par] = stack.back();
    stack.pop_back();
    if (m.size() >= max_worlds) throw std::length_error("tree unfolding too large");
    std::size_t w = m.AddWorld(AtomsIn(trace.nodes[node].sequent));
    parent.push_back(par);
    const auto& kids = trace.nodes[node].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, w});
  }
  for (std::size_t w = 0; w < m.size(); ++w) {
    for (std::size_t a = w; a != SIZE_MAX; a = parent[a]) m.access[a][w] = true;
  }
  return m;
}

nlohmann::json KripkeModelToJson(const KripkeModel& m) {
  nlohmann::json j;
  j["root"] = m.root;
  j["worlds"] = nlohmann::json::array();
  j["access"] = nlohmann::json::array();
  j["val"] = nlohmann::json::object();
  for (std::size_t p = 0; p < m.size(); ++p) {
    j["worlds"].push_back(p);
    j["val"][std::to_string(p)] = m.val[p];
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (m.access[p][q]) j["access"].push_back({p, q});
    }
  }
  return j;
}

KripkeModel KripkeModelFromJson(const nlohmann::json& j) {
  KripkeModel m;
  const auto& worlds = j.at("worlds");
  std::map<std::string, std::size_t> index;
  for (const auto& w : worlds) {
    std::string key = w.is_string() ? w.get<std::string>() : std::to_string(w.get<std::size_t>());
    std::set<std::string> atoms;
    if (j.contains("val") && j["val"].contains(key)) {
      atoms = j["val"][key].get<std::set<std::string>>();
    }
    index[key] = m.AddWorld(std::move(atoms));
  }
  auto lookup = [&](const nlohmann::json& w) {
    std::string key = w.is_string() ? w.get<std::string>() : std::to_string(w.get<std::size_t>());
    auto it = index.find(key);
    if (it == index.end()) throw std::out_of_range("unknown world " + key);
    return it->second;
  };
  if (j.contains("access")) {
    for (const auto& pair : j["access"]) m.access[lookup(pair.at(0))][lookup(pair.at(1))] = true;
  }
  if (j.contains("root")) m.root = lookup(j["root"]);
  return m;
}

}  // namespace clint
