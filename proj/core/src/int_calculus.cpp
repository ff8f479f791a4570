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

#include <algorithm>
#include <bitset>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "clint/calculus.hpp"

namespace clint {

namespace {

constexpr const char* kIntRuleNames[] = {
    "AXIOM", "EXCHANGE", "WEAKENING", "CONTRACTION", "RIGHT_IMP", "LEFT_IMP",
};

bool Fail(std::string* why, const std::string& msg) {
  if (why != nullptr) *why = msg;
  return false;
}

}  // namespace

const char* IntRuleName(IntRule rule) {
  return kIntRuleNames[static_cast<int>(rule)];
}

IntRule ParseIntRule(const std::string& name) {
  for (int i = 0; i < 6; ++i) {
    if (name == kIntRuleNames[i]) return static_cast<IntRule>(i);
  }
  throw std::invalid_argument("unknown rule: " + name);
}

IntProof MakeIntProof(IntSequent conclusion, IntRule rule,
                      std::vector<std::size_t> indices,
                      std::vector<IntProof> premises) {
  return std::make_shared<const IntProofNode>(IntProofNode{
      std::move(conclusion), rule, std::move(indices), std::move(premises)});
}

//------------------------------------------------------------------------------
// Checker

namespace {

using Seq = std::vector<IntFormula>;

bool CheckNode(const IntProofNode& n, std::string* why) {
  const auto& c = n.conclusion;
  const auto& ps = n.premises;
  auto arity = [&](std::size_t k) {
    return ps.size() == k && std::all_of(ps.begin(), ps.end(),
                                         [](const IntProof& p) { return p; });
  };
  const std::string at = " at " + c.str();
  switch (n.rule) {
    case IntRule::kAxiom:
      if (!ps.empty() || c.antecedent.size() != 1 ||
          c.antecedent[0] != c.succedent) {
        return Fail(why, "bad axiom" + at);
      }
      return true;
    case IntRule::kExchange: {
      if (!arity(1) || n.indices.size() != 1) return Fail(why, "bad exchange" + at);
      const auto& p = ps[0]->conclusion;
      std::size_t i = n.indices[0];
      if (i + 1 >= p.antecedent.size() || p.succedent != c.succedent) {
        return Fail(why, "bad exchange" + at);
      }
      Seq swapped = p.antecedent;
      std::swap(swapped[i], swapped[i + 1]);
      if (swapped != c.antecedent) return Fail(why, "bad exchange" + at);
      return true;
    }
    case IntRule::kWeakening: {
      if (!arity(1) || c.antecedent.empty()) return Fail(why, "bad weakening" + at);
      const auto& p = ps[0]->conclusion;
      Seq prefix(c.antecedent.begin(), c.antecedent.end() - 1);
      if (prefix != p.antecedent || p.succedent != c.succedent) {
        return Fail(why, "bad weakening" + at);
      }
      return true;
    }
    case IntRule::kContraction: {
      if (!arity(1)) return Fail(why, "bad contraction" + at);
      const auto& p = ps[0]->conclusion;
      if (p.antecedent.size() < 2 || p.succedent != c.succedent) {
        return Fail(why, "bad contraction" + at);
      }
      const auto& pa = p.antecedent;
      if (pa[pa.size() - 1] != pa[pa.size() - 2]) {
        return Fail(why, "bad contraction" + at);
      }
      Seq expect(pa.begin(), pa.end() - 1);
      if (expect != c.antecedent) return Fail(why, "bad contraction" + at);
      return true;
    }
    case IntRule::kRightImp: {
      if (!arity(1) || c.succedent.is_atom()) return Fail(why, "bad right rule" + at);
      const auto& p = ps[0]->conclusion;
      Seq expect = c.antecedent;
      expect.push_back(c.succedent.left());
      if (expect != p.antecedent || p.succedent != c.succedent.right()) {
        return Fail(why, "bad right rule" + at);
      }
      return true;
    }
    case IntRule::kLeftImp: {
      if (!arity(2) || n.indices.size() != 1 || c.antecedent.empty()) {
        return Fail(why, "bad left rule" + at);
      }
      const auto& p1 = ps[0]->conclusion;  // G,F => K1
      const auto& p2 = ps[1]->conclusion;  // H => K2
      std::size_t g = n.indices[0];
      const IntFormula& imp = c.antecedent.back();
      if (imp.is_atom() || p1.antecedent.size() != g + 1 ||
          c.antecedent.size() != g + p2.antecedent.size() + 1) {
        return Fail(why, "bad left rule" + at);
      }
      if (imp.left() != p2.succedent || imp.right() != p1.antecedent.back() ||
          p1.succedent != c.succedent) {
        return Fail(why, "bad left rule" + at);
      }
      if (!std::equal(p1.antecedent.begin(), p1.antecedent.begin() + g,
                      c.antecedent.begin()) ||
          !std::equal(p2.antecedent.begin(), p2.antecedent.end(),
                      c.antecedent.begin() + g)) {
        return Fail(why, "bad left rule" + at);
      }
      return true;
    }
  }
  return Fail(why, "unknown rule");
}

}  // namespace

bool CheckInt(const IntProof& proof, std::string* why) {
  if (!proof) return Fail(why, "null proof");
  std::unordered_set<const IntProofNode*> seen;
  std::vector<const IntProofNode*> stack{proof.get()};
  while (!stack.empty()) {
    const IntProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (!CheckNode(*n, why)) return false;
    for (const auto& p : n->premises) stack.push_back(p.get());
  }
  return true;
}

std::size_t ProofSize(const IntProof& proof) {
  std::size_t total = 0;
  std::vector<const IntProofNode*> stack{proof.get()};
  while (!stack.empty()) {
    const IntProofNode* n = stack.back();
    stack.pop_back();
    ++total;
    for (const auto& p : n->premises) stack.push_back(p.get());
  }
  return total;
}

//------------------------------------------------------------------------------
// JSON

namespace {

IntSequent ReadSequent(const std::string& text) {
  ImpKind kind = text.find("->>") != std::string::npos ? ImpKind::kPimp
                                                        : ImpKind::kBimp;
  return ParseIntSequent(text, kind, /*allow_reserved=*/true);
}

}  // namespace

nlohmann::json IntProofToJson(const IntProof& proof) {
  nlohmann::json j;
  j["conclusion"] = proof->conclusion.str();
  j["rule"] = IntRuleName(proof->rule);
  j["indices"] = proof->indices;
  j["premises"] = nlohmann::json::array();
  for (const auto& p : proof->premises) j["premises"].push_back(IntProofToJson(p));
  return j;
}

IntProof IntProofFromJson(const nlohmann::json& j) {
  std::vector<IntProof> premises;
  for (const auto& p : j.at("premises")) premises.push_back(IntProofFromJson(p));
  return MakeIntProof(ReadSequent(j.at("conclusion").get<std::string>()),
                      ParseIntRule(j.at("rule").get<std::string>()),
                      j.at("indices").get<std::vector<std::size_t>>(),
                      std::move(premises));
}

nlohmann::json TraceToJson(const RefutationTrace& trace) {
  nlohmann::json j;
  j["root"] = trace.root.str();
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : trace.nodes) {
    nlohmann::json node;
    node["sequent"] = n.sequent.str();
    node["children"] = n.children;
    j["nodes"].push_back(node);
  }
  return j;
}

//------------------------------------------------------------------------------
// Search

namespace {

constexpr std::size_t kMaxSubformulas = 512;
using Set = std::bitset<kMaxSubformulas>;

struct Key {
  Set gamma;
  int goal;
  bool operator==(const Key& o) const {
    return goal == o.goal && gamma == o.gamma;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    return std::hash<Set>()(k.gamma) * 31u + static_cast<std::size_t>(k.goal);
  }
};

enum class Step { kAxiom, kRight, kLeft };

struct SearchNode {
  Set gamma;
  int goal;
  Step step;
  int principal = -1;  // implication id for kLeft
  int first = -1;      // kRight: premise; kLeft: Gamma,B => goal
  int second = -1;     // kLeft: Gamma => A
};

class Prover {
 public:
  explicit Prover(const IntSequent& s) {
    for (const auto& f : s.antecedent) Intern(f);
    Intern(s.succedent);
  }

  int Intern(const IntFormula& f) {
    auto it = ids_.find(f.str());
    if (it != ids_.end()) return it->second;
    int l = -1, r = -1;
    if (!f.is_atom()) {
      l = Intern(f.left());
      r = Intern(f.right());
    }
    if (formulas_.size() >= kMaxSubformulas) {
      throw std::length_error("too many distinct subformulas");
    }
    int id = static_cast<int>(formulas_.size());
    formulas_.push_back(f);
    left_.push_back(l);
    right_.push_back(r);
    head_.push_back(r < 0 ? static_cast<int>(formulas_.size()) - 1 : head_[r]);
    ids_.emplace(f.str(), id);
    return id;
  }

  int Id(const IntFormula& f) const { return ids_.at(f.str()); }
  const IntFormula& Formula(int id) const { return formulas_[id]; }
  bool IsAtom(int id) const { return left_[id] < 0; }
  int Left(int id) const { return left_[id]; }
  int Right(int id) const { return right_[id]; }
  std::size_t Count() const { return formulas_.size(); }
  const SearchNode& Node(int i) const { return nodes_[i]; }

  Set SetOf(const std::vector<IntFormula>& fs) const {
    Set s;
    for (const auto& f : fs) s.set(Id(f));
    return s;
  }

  // Node index of a proof, or -1.
  int Prove(const Set& gamma, int goal) {
    int low = INT_MAX;
    on_path_.clear();
    return Search(gamma, goal, 0, low);
  }

 private:
  int Search(const Set& gamma, int goal, int depth, int& low) {
    Key key{gamma, goal};
    if (auto it = proved_.find(key); it != proved_.end()) return it->second;
    if (failed_.count(key)) return -1;
    if (auto it = on_path_.find(key); it != on_path_.end()) {
      low = std::min(low, it->second);
      return -1;
    }
    if (gamma.test(goal)) return Record(key, SearchNode{gamma, goal, Step::kAxiom});

    int my_low = INT_MAX;
    int result = -1;
    on_path_.emplace(key, depth);
    if (!IsAtom(goal)) {
      Set next = gamma;
      next.set(Left(goal));
      int p = Search(next, Right(goal), depth + 1, my_low);
      if (p >= 0) {
        SearchNode n{gamma, goal, Step::kRight};
        n.first = p;
        result = Record(key, n);
      }
    } else {
      // Goal-directed search is complete here: an atom only needs the left
      // rule on implications whose final atom it is.
      for (std::size_t i = 0; i < Count() && result < 0; ++i) {
        int id = static_cast<int>(i);
        if (!gamma.test(i) || IsAtom(id) || head_[i] != goal || gamma.test(Right(id))) {
          continue;
        }
        int second = Search(gamma, Left(id), depth + 1, my_low);
        if (second < 0) continue;
        Set next = gamma;
        next.set(Right(id));
        int first = Search(next, goal, depth + 1, my_low);
        if (first < 0) continue;
        SearchNode n{gamma, goal, Step::kLeft};
        n.principal = id;
        n.first = first;
        n.second = second;
        result = Record(key, n);
      }
    }
    on_path_.erase(key);
    if (result >= 0) return result;
    // A failure that leaned on an ancestor still on the path is only a
    // failure relative to that path.
    if (my_low >= depth) {
      failed_.insert(key);
    } else {
      low = std::min(low, my_low);
    }
    return -1;
  }

  int Record(const Key& key, SearchNode n) {
    int idx = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(n));
    proved_.emplace(key, idx);
    return idx;
  }

  std::unordered_map<std::string, int> ids_;
  std::vector<IntFormula> formulas_;
  std::vector<int> left_, right_, head_;
  std::vector<SearchNode> nodes_;
  std::unordered_map<Key, int, KeyHash> proved_;
  std::unordered_set<Key, KeyHash> failed_;
  std::unordered_map<Key, int, KeyHash> on_path_;
};

//------------------------------------------------------------------------------
// Reconstruction with explicit structural rules

class Builder {
 public:
  explicit Builder(const Prover& prover) : pv_(prover) {}

  // A proof of the sequent at node with antecedent target (which must list
  // every formula of the node's set).
  IntProof Build(int node, const Seq& target) { return Adjust(Minimal(node), target); }

 private:
  // A proof whose antecedent is the formulas the node's derivation actually
  // uses, once each, in id order.  Keeping contexts minimal means the left
  // rule only contracts formulas that both premises need.
  IntProof Minimal(int node) {
    if (auto it = memo_.find(node); it != memo_.end()) return it->second;
    const SearchNode& n = pv_.Node(node);
    const IntFormula& goal = pv_.Formula(n.goal);
    IntProof out;
    switch (n.step) {
      case Step::kAxiom:
        out = MakeIntProof(IntSequent{{goal}, goal}, IntRule::kAxiom, {}, {});
        break;
      case Step::kRight: {
        const IntFormula e = goal.left();
        IntProof p = Minimal(n.first);
        Seq g = Without(p->conclusion.antecedent, e);
        Seq ext = g;
        ext.push_back(e);
        p = Adjust(p, ext);
        out = MakeIntProof(IntSequent{g, goal}, IntRule::kRightImp, {}, {p});
        break;
      }
      case Step::kLeft: {
        const IntFormula& imp = pv_.Formula(n.principal);
        IntProof p1 = Minimal(n.first);
        IntProof p2 = Minimal(n.second);
        Seq g = Without(p1->conclusion.antecedent, imp.right());
        Seq ext = g;
        ext.push_back(imp.right());
        p1 = Adjust(p1, ext);
        const Seq& h = p2->conclusion.antecedent;
        Seq conc = g;
        conc.insert(conc.end(), h.begin(), h.end());
        conc.push_back(imp);
        out = MakeIntProof(IntSequent{conc, goal}, IntRule::kLeftImp, {g.size()},
                           {p1, p2});
        break;
      }
    }
    out = Adjust(out, Sorted(out->conclusion.antecedent));
    memo_.emplace(node, out);
    return out;
  }

  static Seq Without(const Seq& s, const IntFormula& f) {
    Seq out;
    for (const auto& g : s) {
      if (g != f) out.push_back(g);
    }
    return out;
  }

  // Distinct formulas in id order.
  Seq Sorted(const Seq& s) const {
    std::vector<int> ids;
    for (const auto& f : s) ids.push_back(pv_.Id(f));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Seq out;
    for (int id : ids) out.push_back(pv_.Formula(id));
    return out;
  }

 public:
  // Rewrites the antecedent of p into target.  Every formula of p's
  // antecedent must occur in target.
  static IntProof Adjust(IntProof p, const Seq& target) {
    auto count = [](const Seq& s, const IntFormula& f) {
      return static_cast<std::size_t>(std::count(s.begin(), s.end(), f));
    };
    // Contract surplus copies.
    for (bool changed = true; changed;) {
      changed = false;
      const Seq& cur = p->conclusion.antecedent;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (count(cur, cur[i]) > std::max<std::size_t>(count(target, cur[i]), 1)) {
          IntFormula f = cur[i];
          std::size_t j = i + 1;
          while (cur[j] != f) ++j;
          p = MoveTo(p, j, cur.size() - 1);
          p = MoveTo(p, i, p->conclusion.antecedent.size() - 2);
          Seq shorter = p->conclusion.antecedent;
          shorter.pop_back();
          p = MakeIntProof(IntSequent{shorter, p->conclusion.succedent},
                           IntRule::kContraction, {}, {p});
          changed = true;
          break;
        }
      }
    }
    // Weaken in missing copies.
    for (const auto& f : target) {
      while (count(p->conclusion.antecedent, f) < count(target, f)) {
        Seq longer = p->conclusion.antecedent;
        longer.push_back(f);
        p = MakeIntProof(IntSequent{longer, p->conclusion.succedent},
                         IntRule::kWeakening, {}, {p});
      }
    }
    // Selection into place.
    for (std::size_t i = 0; i < target.size(); ++i) {
      const Seq& cur = p->conclusion.antecedent;
      if (cur[i] == target[i]) continue;
      std::size_t j = i + 1;
      while (cur[j] != target[i]) ++j;
      p = MoveTo(p, j, i);
    }
    return p;
  }

  static IntProof MoveTo(IntProof p, std::size_t from, std::size_t to) {
    while (from != to) {
      std::size_t i = from < to ? from : from - 1;
      Seq s = p->conclusion.antecedent;
      std::swap(s[i], s[i + 1]);
      p = MakeIntProof(IntSequent{s, p->conclusion.succedent}, IntRule::kExchange,
                       {i}, {p});
      from = from < to ? from + 1 : from - 1;
    }
    return p;
  }

 private:
  const Prover& pv_;
  std::unordered_map<int, IntProof> memo_;
};

//------------------------------------------------------------------------------
// Refutation trace

class TraceBuilder {
 public:
  TraceBuilder(Prover& prover, const IntSequent& root)
      : pv_(prover), trace_{root, {}} {
    for (const auto& f : root.antecedent) Collect(pv_.Id(f));
    Collect(pv_.Id(root.succedent));
    std::sort(universe_.begin(), universe_.end(), [&](int a, int b) {
      return CanonicalLess(pv_.Formula(a), pv_.Formula(b));
    });
  }

  RefutationTrace Run() {
    Set gamma = pv_.SetOf(trace_.root.antecedent);
    World(gamma, pv_.Id(trace_.root.succedent));
    return std::move(trace_);
  }

 private:
  void Collect(int id) {
    if (std::find(universe_.begin(), universe_.end(), id) != universe_.end()) return;
    universe_.push_back(id);
    if (!pv_.IsAtom(id)) {
      Collect(pv_.Left(id));
      Collect(pv_.Right(id));
    }
  }

  // Gamma => goal is unprovable.  Returns the node index.
  std::size_t World(Set gamma, int goal) {
    while (!pv_.IsAtom(goal)) {
      gamma.set(pv_.Left(goal));
      goal = pv_.Right(goal);
    }
    for (int f : universe_) {
      if (gamma.test(f)) continue;
      Set next = gamma;
      next.set(f);
      if (pv_.Prove(next, goal) < 0) gamma = next;
    }
    if (auto it = index_.find(gamma); it != index_.end()) return it->second;

    std::size_t idx = trace_.nodes.size();
    Seq members;
    for (int f : universe_) {
      if (gamma.test(f)) members.push_back(pv_.Formula(f));
    }
    trace_.nodes.push_back(TraceNode{IntSequent{members, pv_.Formula(goal)}, {}});
    index_.emplace(gamma, idx);

    std::vector<std::size_t> kids;
    for (int f : universe_) {
      if (pv_.IsAtom(f) || gamma.test(f) || gamma.test(pv_.Left(f))) continue;
      Set next = gamma;
      next.set(pv_.Left(f));
      std::size_t child = World(next, pv_.Right(f));
      if (std::find(kids.begin(), kids.end(), child) == kids.end()) {
        kids.push_back(child);
      }
    }
    trace_.nodes[idx].children = std::move(kids);
    return idx;
  }

  Prover& pv_;
  RefutationTrace trace_;
  std::vector<int> universe_;
  std::unordered_map<Set, std::size_t> index_;
};

}  // namespace

SearchOutcome IntProve(const IntSequent& sequent) {
  Prover prover(sequent);
  Set gamma = prover.SetOf(sequent.antecedent);
  int node = prover.Prove(gamma, prover.Id(sequent.succedent));
  SearchOutcome out;
  if (node >= 0) {
    Builder b(prover);
    out.proof = b.Build(node, sequent.antecedent);
  } else {
    out.trace = TraceBuilder(prover, sequent).Run();
  }
  return out;
}

bool IntProvable(const IntSequent& sequent) {
  Prover prover(sequent);
  return prover.Prove(prover.SetOf(sequent.antecedent),
                      prover.Id(sequent.succedent)) >= 0;
}

}  // namespace clint
