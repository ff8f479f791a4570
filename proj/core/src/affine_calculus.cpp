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
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "clint/calculus.hpp"

namespace clint {

namespace {

constexpr const char* kAffineRuleNames[] = {
    "AXIOM",         "EXCHANGE",      "WEAKENING",  "UC_CONTR",
    "WC_CONTR",      "PARDISJ_INTRO", "PARCONJ_INTRO", "UC_INTRO",
    "WC_INTRO",      "PRECUR_INTRO",  "BRECUR_INTRO",  "CUT",
};

bool Fail(std::string* why, const std::string& msg) {
  if (why != nullptr) *why = msg;
  return false;
}

// Expand with a cache keyed on the printed form.
class Normalizer {
 public:
  const AffineFormula& operator()(const AffineFormula& f) {
    auto it = cache_.find(f.str());
    if (it != cache_.end()) return it->second;
    return cache_.emplace(f.str(), Expand(f)).first->second;
  }
  AffineSequent operator()(const AffineSequent& s) {
    AffineSequent out;
    out.reserve(s.size());
    for (const auto& f : s) out.push_back((*this)(f));
    return out;
  }

 private:
  std::unordered_map<std::string, AffineFormula> cache_;
};

bool AllPrefixed(const AffineSequent& s, std::size_t n, AffineOp op) {
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i].op() != op) return false;
  }
  return true;
}

bool CheckNode(const AffineProofNode& node, Normalizer& nf, std::string* why) {
  const AffineSequent c = nf(node.conclusion);
  std::vector<AffineSequent> ps;
  for (const auto& p : node.premises) {
    if (!p) return Fail(why, "null premise");
    ps.push_back(nf(p->conclusion));
  }
  const std::string rule = AffineRuleName(node.rule);
  const std::string at = rule + " at <" + AffineSequentString(node.conclusion) + ">";
  auto bad = [&]() { return Fail(why, "bad " + at); };
  auto one_premise = [&]() { return ps.size() == 1; };
  auto prefix_equal = [](const AffineSequent& a, const AffineSequent& b,
                         std::size_t n) {
    return a.size() >= n && b.size() >= n &&
           std::equal(a.begin(), a.begin() + n, b.begin());
  };

  switch (node.rule) {
    case AffineRule::kAxiom:
      if (!ps.empty() || c.size() != 2 || c[0] != Negate(c[1])) return bad();
      return true;
    case AffineRule::kExchange: {
      if (!one_premise() || node.indices.size() != 1) return bad();
      std::size_t i = node.indices[0];
      AffineSequent s = ps[0];
      if (i + 1 >= s.size()) return bad();
      std::swap(s[i], s[i + 1]);
      return s == c ? true : bad();
    }
    case AffineRule::kWeakening:
      if (!one_premise() || c.size() != ps[0].size() + 1 ||
          !prefix_equal(c, ps[0], ps[0].size())) {
        return bad();
      }
      return true;
    case AffineRule::kUcContr:
    case AffineRule::kWcContr: {
      AffineOp op = node.rule == AffineRule::kUcContr ? AffineOp::kCoprecur
                                                       : AffineOp::kCobrecur;
      if (!one_premise()) return bad();
      const auto& p = ps[0];
      if (p.size() < 2 || p.size() != c.size() + 1) return bad();
      if (p[p.size() - 1] != p[p.size() - 2] || p.back().op() != op) return bad();
      return prefix_equal(c, p, c.size()) ? true : bad();
    }
    case AffineRule::kParDisjIntro: {
      if (!one_premise() || node.indices.size() != 1) return bad();
      std::size_t n = node.indices[0];
      const auto& p = ps[0];
      if (n < 2 || p.size() < n || c.size() != p.size() - n + 1) return bad();
      const AffineFormula& d = c.back();
      if (d.op() != AffineOp::kParDisj || d.children().size() != n) return bad();
      std::size_t g = p.size() - n;
      if (!prefix_equal(c, p, g)) return bad();
      for (std::size_t k = 0; k < n; ++k) {
        if (d.child(k) != p[g + k]) return bad();
      }
      return true;
    }
    case AffineRule::kParConjIntro: {
      std::size_t n = ps.size();
      if (n < 2 || c.empty()) return bad();
      const AffineFormula& d = c.back();
      if (d.op() != AffineOp::kParConj || d.children().size() != n) return bad();
      AffineSequent ctx;
      for (std::size_t k = 0; k < n; ++k) {
        if (ps[k].empty() || ps[k].back() != d.child(k)) return bad();
        ctx.insert(ctx.end(), ps[k].begin(), ps[k].end() - 1);
      }
      ctx.push_back(d);
      return ctx == c ? true : bad();
    }
    case AffineRule::kUcIntro:
    case AffineRule::kWcIntro:
    case AffineRule::kPrecurIntro:
    case AffineRule::kBrecurIntro: {
      AffineOp op = AffineOp::kCoprecur;
      AffineOp ctx_op = AffineOp::kAtom;
      if (node.rule == AffineRule::kWcIntro) op = AffineOp::kCobrecur;
      if (node.rule == AffineRule::kPrecurIntro) {
        op = AffineOp::kPrecur;
        ctx_op = AffineOp::kCoprecur;
      }
      if (node.rule == AffineRule::kBrecurIntro) {
        op = AffineOp::kBrecur;
        ctx_op = AffineOp::kCobrecur;
      }
      if (!one_premise()) return bad();
      const auto& p = ps[0];
      if (p.empty() || c.size() != p.size()) return bad();
      if (c.back().op() != op || c.back().child(0) != p.back()) return bad();
      if (!prefix_equal(c, p, p.size() - 1)) return bad();
      if (ctx_op != AffineOp::kAtom && !AllPrefixed(c, c.size() - 1, ctx_op)) {
        return bad();
      }
      return true;
    }
    case AffineRule::kCut: {
      if (ps.size() != 2 || !node.cut_formula) return bad();
      AffineFormula e = nf(*node.cut_formula);
      const auto& l = ps[0];
      const auto& r = ps[1];
      if (l.empty() || r.empty() || l.back() != e || r.front() != Negate(e)) {
        return bad();
      }
      AffineSequent ctx(l.begin(), l.end() - 1);
      ctx.insert(ctx.end(), r.begin() + 1, r.end());
      return ctx == c ? true : bad();
    }
  }
  return Fail(why, "unknown rule");
}

}  // namespace

const char* AffineRuleName(AffineRule rule) {
  return kAffineRuleNames[static_cast<int>(rule)];
}

AffineRule ParseAffineRule(const std::string& name) {
  for (int i = 0; i < 12; ++i) {
    if (name == kAffineRuleNames[i]) return static_cast<AffineRule>(i);
  }
  throw std::invalid_argument("unknown rule: " + name);
}

AffineProof MakeAffineProof(AffineSequent conclusion, AffineRule rule,
                            std::vector<std::size_t> indices,
                            std::vector<AffineProof> premises,
                            std::optional<AffineFormula> cut_formula) {
  return std::make_shared<const AffineProofNode>(
      AffineProofNode{std::move(conclusion), rule, std::move(indices),
                      std::move(premises), std::move(cut_formula)});
}

bool CheckAffine(const AffineProof& proof, std::string* why) {
  if (!proof) return Fail(why, "null proof");
  Normalizer nf;
  std::unordered_set<const AffineProofNode*> seen;
  std::vector<const AffineProofNode*> stack{proof.get()};
  while (!stack.empty()) {
    const AffineProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (!CheckNode(*n, nf, why)) return false;
    for (const auto& p : n->premises) stack.push_back(p.get());
  }
  return true;
}

std::size_t AffineDagSize(const AffineProof& proof) {
  std::unordered_set<const AffineProofNode*> seen;
  std::vector<const AffineProofNode*> stack{proof.get()};
  while (!stack.empty()) {
    const AffineProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& p : n->premises) stack.push_back(p.get());
  }
  return seen.size();
}

bool ContainsCut(const AffineProof& proof) {
  std::unordered_set<const AffineProofNode*> seen;
  std::vector<const AffineProofNode*> stack{proof.get()};
  while (!stack.empty()) {
    const AffineProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->rule == AffineRule::kCut) return true;
    for (const auto& p : n->premises) stack.push_back(p.get());
  }
  return false;
}

nlohmann::json AffineProofToJson(const AffineProof& proof) {
  nlohmann::json j;
  j["conclusion"] = nlohmann::json::array();
  for (const auto& f : proof->conclusion) j["conclusion"].push_back(f.str());
  j["rule"] = AffineRuleName(proof->rule);
  j["indices"] = proof->indices;
  if (proof->cut_formula) j["cut"] = proof->cut_formula->str();
  j["premises"] = nlohmann::json::array();
  for (const auto& p : proof->premises) {
    j["premises"].push_back(AffineProofToJson(p));
  }
  return j;
}

AffineProof AffineProofFromJson(const nlohmann::json& j) {
  AffineSequent conclusion;
  for (const auto& f : j.at("conclusion")) {
    conclusion.push_back(ParseAffineFormula(f.get<std::string>(), true));
  }
  std::vector<AffineProof> premises;
  for (const auto& p : j.at("premises")) premises.push_back(AffineProofFromJson(p));
  std::optional<AffineFormula> cut;
  if (j.contains("cut")) cut = ParseAffineFormula(j["cut"].get<std::string>(), true);
  return MakeAffineProof(std::move(conclusion),
                         ParseAffineRule(j.at("rule").get<std::string>()),
                         j.at("indices").get<std::vector<std::size_t>>(),
                         std::move(premises), std::move(cut));
}

//------------------------------------------------------------------------------
// Step builders

namespace affine {

namespace {

const AffineSequent& Conc(const AffineProof& p) { return p->conclusion; }

}  // namespace

AffineProof Axiom(const AffineFormula& e) {
  return MakeAffineProof({AffineFormula::Neg(e), e}, AffineRule::kAxiom, {}, {});
}

AffineProof Exchange(const AffineProof& p, std::size_t i) {
  AffineSequent s = Conc(p);
  if (i + 1 >= s.size()) throw std::out_of_range("exchange index");
  std::swap(s[i], s[i + 1]);
  return MakeAffineProof(std::move(s), AffineRule::kExchange, {i}, {p});
}

AffineProof Weaken(const AffineProof& p, const AffineFormula& e) {
  AffineSequent s = Conc(p);
  s.push_back(e);
  return MakeAffineProof(std::move(s), AffineRule::kWeakening, {}, {p});
}

AffineProof Contract(const AffineProof& p) {
  AffineSequent s = Conc(p);
  if (s.size() < 2) throw std::invalid_argument("contraction needs two formulas");
  AffineOp op = Expand(s.back()).op();
  s.pop_back();
  AffineRule rule =
      op == AffineOp::kCoprecur ? AffineRule::kUcContr : AffineRule::kWcContr;
  return MakeAffineProof(std::move(s), rule, {}, {p});
}

AffineProof DisjIntro(const AffineProof& p, std::size_t n,
                      std::optional<AffineFormula> written) {
  AffineSequent s = Conc(p);
  if (n < 2 || n > s.size()) throw std::invalid_argument("disjunction arity");
  std::vector<AffineFormula> parts(s.end() - n, s.end());
  s.erase(s.end() - static_cast<std::ptrdiff_t>(n), s.end());
  s.push_back(written ? *written : AffineFormula::ParDisj(std::move(parts)));
  return MakeAffineProof(std::move(s), AffineRule::kParDisjIntro, {n}, {p});
}

AffineProof ConjIntro(const std::vector<AffineProof>& premises,
                      std::optional<AffineFormula> written) {
  AffineSequent s;
  std::vector<AffineFormula> parts;
  for (const auto& p : premises) {
    const auto& c = Conc(p);
    if (c.empty()) throw std::invalid_argument("conjunction premise is empty");
    s.insert(s.end(), c.begin(), c.end() - 1);
    parts.push_back(c.back());
  }
  s.push_back(written ? *written : AffineFormula::ParConj(std::move(parts)));
  return MakeAffineProof(std::move(s), AffineRule::kParConjIntro, {}, premises);
}

AffineProof CoIntro(const AffineProof& p, AffineOp co_op,
                    std::optional<AffineFormula> written) {
  AffineSequent s = Conc(p);
  AffineFormula last = s.back();
  s.back() = written ? *written : AffineFormula::Make(co_op, {last});
  AffineRule rule =
      co_op == AffineOp::kCoprecur ? AffineRule::kUcIntro : AffineRule::kWcIntro;
  return MakeAffineProof(std::move(s), rule, {}, {p});
}

AffineProof RecurIntro(const AffineProof& p, AffineOp op,
                       std::optional<AffineFormula> written) {
  AffineSequent s = Conc(p);
  AffineFormula last = s.back();
  s.back() = written ? *written : AffineFormula::Make(op, {last});
  AffineRule rule =
      op == AffineOp::kPrecur ? AffineRule::kPrecurIntro : AffineRule::kBrecurIntro;
  return MakeAffineProof(std::move(s), rule, {}, {p});
}

AffineProof Cut(const AffineProof& left, const AffineProof& right) {
  const auto& l = Conc(left);
  const auto& r = Conc(right);
  AffineSequent s(l.begin(), l.end() - 1);
  s.insert(s.end(), r.begin() + 1, r.end());
  return MakeAffineProof(std::move(s), AffineRule::kCut, {}, {left, right},
                         l.back());
}

AffineProof Move(const AffineProof& p, std::size_t from, std::size_t to) {
  AffineProof q = p;
  while (from < to) {
    q = Exchange(q, from);
    ++from;
  }
  while (from > to) {
    q = Exchange(q, from - 1);
    --from;
  }
  return q;
}

AffineProof Permute(const AffineProof& p, const AffineSequent& target) {
  AffineProof q = p;
  if (Conc(q).size() != target.size()) {
    throw std::invalid_argument("permutation of a different length");
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    const auto& cur = Conc(q);
    if (cur[i] == target[i]) continue;
    std::size_t j = i + 1;
    while (j < cur.size() && cur[j] != target[i]) ++j;
    if (j == cur.size()) {
      throw std::invalid_argument("not a permutation: " + target[i].str());
    }
    q = Move(q, j, i);
  }
  return q;
}

AffineProof Normalize(const AffineProof& p, const AffineSequent& target) {
  auto count = [](const AffineSequent& s, const AffineFormula& f) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), f));
  };
  AffineProof q = p;
  for (bool changed = true; changed;) {
    changed = false;
    const auto& cur = Conc(q);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (count(cur, cur[i]) <= count(target, cur[i])) continue;
      AffineOp op = Expand(cur[i]).op();
      if (op != AffineOp::kCobrecur && op != AffineOp::kCoprecur) {
        throw std::invalid_argument("surplus formula is not contractible: " +
                                    cur[i].str());
      }
      AffineFormula f = cur[i];
      std::size_t j = i + 1;
      while (cur[j] != f) ++j;
      std::size_t n = cur.size();
      q = Move(q, j, n - 1);
      q = Move(q, i, n - 2);
      q = Contract(q);
      changed = true;
      break;
    }
  }
  for (const auto& f : target) {
    while (count(Conc(q), f) < count(target, f)) q = Weaken(q, f);
  }
  return Permute(q, target);
}

}  // namespace affine

}  // namespace clint
