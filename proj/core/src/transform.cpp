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

#include "clint/transform.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace clint {
namespace {

using affine::Axiom;
using affine::ConjIntro;
using affine::DisjIntro;
using affine::Exchange;
using affine::Move;

IntFormula A(const std::string& name) { return IntFormula::Atom(name); }
AffineFormula AA(const std::string& name) { return AffineFormula::Atom(name); }

bool IsAtomicImp(const IntFormula& f, ImpKind kind) {
  return !f.is_atom() && f.kind() == kind;
}

AffineFormula Conj(std::vector<AffineFormula> parts, const std::string& w) {
  if (parts.empty()) return AA(w);
  return AffineFormula::Limp(AffineFormula::ParConj(std::move(parts)), AA(w));
}

const AffineFormula& Conc1(const AffineProof& p) {
  if (p->conclusion.size() != 1) throw std::logic_error("expected one formula");
  return p->conclusion[0];
}

// The same inference with a different (Expand-equal) written conclusion.
AffineProof Restated(const AffineProof& p, const AffineFormula& f) {
  return MakeAffineProof({f}, p->rule, p->indices, p->premises, p->cut_formula);
}

AffineProof Identity(const AffineFormula& f) {
  return DisjIntro(Axiom(f), 2, AffineFormula::Limp(f, f));
}

// (A & B -> C) -> (~A | (~B | C)).
AffineProof CurryProof(const AffineFormula& a, const AffineFormula& b,
                       const AffineFormula& c) {
  using F = AffineFormula;
  const F uncurried = F::Limp(F::ParConj({a, b}), c);
  const F inner = F::ParDisj({F::Neg(b), c});
  const F curried = F::ParDisj({F::Neg(a), inner});
  AffineProof ab = ConjIntro({Axiom(a), Axiom(b)});       // ~A, ~B, A & B
  AffineProof cc = Exchange(Axiom(c), 0);                 // C, ~C
  AffineProof q = ConjIntro({ab, cc}, F::Neg(uncurried));  // ~A, ~B, C, ~U
  q = Move(q, 3, 0);
  q = DisjIntro(q, 2, inner);
  q = DisjIntro(q, 2, curried);
  return DisjIntro(q, 2, F::Limp(uncurried, curried));
}

void AppendLetters(std::string_view text, std::string& out) {
  // Atoms are maximal identifier runs not directly after '!' or '?'.
  std::size_t i = 0;
  while (i < text.size()) {
    auto ident = [&](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    };
    if (!ident(text[i])) {
      out += text[i++];
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && ident(text[j])) ++j;
    std::string_view word = text.substr(i, j - i);
    if (i > 0 && (text[i - 1] == '!' || text[i - 1] == '?')) {
      out += word;
    } else {
      out += "Ux ^";
      out += word;
      out += "(x)";
    }
    i = j;
  }
}

}  // namespace

IntSequent StandardSequent::ToSequent() const {
  std::vector<IntFormula> ant;
  for (const auto& r : rows) {
    ant.push_back(IntFormula::Imp(kind, A(r.x), IntFormula::Imp(kind, A(r.y), A(r.z))));
  }
  for (const auto& r : rows) {
    ant.push_back(IntFormula::Imp(kind, IntFormula::Imp(kind, A(r.p), A(r.q)), A(r.r)));
  }
  return IntSequent{std::move(ant), A(w)};
}

std::vector<std::string> StandardSequent::Atoms() const {
  std::set<std::string> out{w};
  for (const auto& r : rows) out.insert({r.x, r.y, r.z, r.p, r.q, r.r});
  return {out.begin(), out.end()};
}

std::optional<StandardSequent> AsStandard(const IntSequent& s, ImpKind kind) {
  const auto& ant = s.antecedent;
  if (ant.size() % 2 != 0 || !s.succedent.is_atom()) return std::nullopt;
  StandardSequent out;
  out.kind = kind;
  out.w = s.succedent.name();
  const std::size_t n = ant.size() / 2;
  out.rows.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const IntFormula& f = ant[j];
    if (!IsAtomicImp(f, kind) || !f.left().is_atom() || !IsAtomicImp(f.right(), kind) ||
        !f.right().left().is_atom() || !f.right().right().is_atom()) {
      return std::nullopt;
    }
    out.rows[j].x = f.left().name();
    out.rows[j].y = f.right().left().name();
    out.rows[j].z = f.right().right().name();
    const IntFormula& g = ant[n + j];
    if (!IsAtomicImp(g, kind) || !g.right().is_atom() || !IsAtomicImp(g.left(), kind) ||
        !g.left().left().is_atom() || !g.left().right().is_atom()) {
      return std::nullopt;
    }
    out.rows[j].p = g.left().left().name();
    out.rows[j].q = g.left().right().name();
    out.rows[j].r = g.right().name();
  }
  return out;
}

std::string NameTable::NameOf(const IntFormula& f) const {
  if (f.is_atom()) return f.name();
  for (const auto& [g, name] : entries) {
    if (g == f) return name;
  }
  throw std::out_of_range("no name for " + f.str());
}

Standardization Standardize(const IntFormula& k) {
  return Standardize(k, k.is_atom() ? ImpKind::kBimp : k.kind());
}

Standardization Standardize(const IntFormula& k, ImpKind kind) {
  const std::vector<std::string> atoms = AtomsOf(k);
  const std::set<std::string> taken(atoms.begin(), atoms.end());
  Standardization st;
  std::size_t counter = 0;
  for (const IntFormula& g : Subformulas(k)) {
    if (g.is_atom()) continue;
    std::string name;
    do {
      name = "_w" + std::to_string(++counter);
    } while (taken.count(name));
    st.names.entries.emplace_back(g, name);
  }
  st.sequent.kind = kind;
  for (const auto& [g, name] : st.names.entries) {
    const std::string e = st.names.NameOf(g.left());
    const std::string f = st.names.NameOf(g.right());
    st.sequent.rows.push_back(StandardRow{name, e, f, e, f, name});
  }
  st.sequent.w = st.names.NameOf(k);
  return st;
}

AffineFormula Desequentize(const StandardSequent& s) {
  using F = AffineFormula;
  auto rec = [&](F f) { return Recur(s.kind, std::move(f)); };
  std::vector<F> parts;
  for (const auto& r : s.rows) {
    parts.push_back(rec(F::Limp(F::ParConj({AA(r.x), AA(r.y)}), AA(r.z))));
  }
  for (const auto& r : s.rows) {
    parts.push_back(rec(F::Limp(F::Limp(rec(AA(r.p)), AA(r.q)), AA(r.r))));
  }
  return Conj(std::move(parts), s.w);
}

AffineFormula IntendedMeaning(const StandardSequent& s) {
  using F = AffineFormula;
  auto rec = [&](F f) { return Recur(s.kind, std::move(f)); };
  std::vector<F> parts;
  for (const auto& r : s.rows) {
    parts.push_back(rec(F::Limp(F::ParConj({rec(AA(r.x)), rec(AA(r.y))}), AA(r.z))));
  }
  for (const auto& r : s.rows) {
    parts.push_back(rec(F::Limp(rec(F::Limp(rec(AA(r.p)), AA(r.q))), AA(r.r))));
  }
  return Conj(std::move(parts), s.w);
}

std::vector<Path> InsertedRecurrencePaths(const StandardSequent& s) {
  std::vector<Path> out;
  const std::size_t n = s.s();
  for (std::size_t j = 0; j < n; ++j) {
    out.push_back({0, j, 0, 0, 0});
    out.push_back({0, j, 0, 0, 1});
  }
  for (std::size_t j = 0; j < n; ++j) out.push_back({0, n + j, 0, 0});
  return out;
}

std::vector<Path> RecurrencePaths(const StandardSequent& s) {
  std::vector<Path> out;
  const std::size_t n = s.s();
  for (std::size_t i = 0; i < 2 * n; ++i) out.push_back({0, i});
  for (std::size_t j = 0; j < n; ++j) out.push_back({0, n + j, 0, 0, 0});
  return out;
}

const std::string& GameForm::Letter(const std::string& atom) const {
  auto it = letters.find(atom);
  if (it == letters.end()) throw std::out_of_range("no letter for atom " + atom);
  return it->second;
}

std::string GameForm::ElementaryString() const {
  std::string out;
  AppendLetters(formula.str(), out);
  return out;
}

GameForm Elementarize(const AffineFormula& d, ImpKind fallback) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("not a desequentized formula (" + why + "): " + d.str());
  };
  StandardSequent s;
  s.kind = fallback;
  if (d.is_atom()) {
    s.w = d.name();
  } else {
    if (d.op() != AffineOp::kLimp || !d.child(1).is_atom()) throw bad("shape");
    s.w = d.child(1).name();
    const AffineFormula& conj = d.child(0);
    if (conj.op() != AffineOp::kParConj || conj.children().size() % 2 != 0) {
      throw bad("antecedent");
    }
    const AffineOp op = conj.child(0).op();
    if (op != AffineOp::kBrecur && op != AffineOp::kPrecur) throw bad("recurrence");
    s.kind = op == AffineOp::kBrecur ? ImpKind::kBimp : ImpKind::kPimp;
    const std::size_t n = conj.children().size() / 2;
    s.rows.resize(n);
    auto atom = [&](const AffineFormula& f) -> const std::string& {
      if (!f.is_atom()) throw bad("non-atomic letter " + f.str());
      return f.name();
    };
    auto body = [&](const AffineFormula& f) -> const AffineFormula& {
      if (f.op() != op || f.child(0).op() != AffineOp::kLimp) throw bad("row " + f.str());
      return f.child(0);
    };
    for (std::size_t j = 0; j < n; ++j) {
      const AffineFormula& x = body(conj.child(j));
      if (x.child(0).op() != AffineOp::kParConj || x.child(0).children().size() != 2) {
        throw bad("row " + x.str());
      }
      s.rows[j].x = atom(x.child(0).child(0));
      s.rows[j].y = atom(x.child(0).child(1));
      s.rows[j].z = atom(x.child(1));
      const AffineFormula& p = body(conj.child(n + j));
      const AffineFormula& pq = p.child(0);
      if (pq.op() != AffineOp::kLimp || pq.child(0).op() != op) throw bad("row " + p.str());
      s.rows[j].p = atom(pq.child(0).child(0));
      s.rows[j].q = atom(pq.child(1));
      s.rows[j].r = atom(p.child(1));
    }
  }
  if (Desequentize(s) != d) throw bad("shape");
  GameForm g{s, d, {}};
  for (const auto& a : s.Atoms()) g.letters[a] = "^" + a;
  return g;
}

GameForm MakeGameForm(const IntFormula& k) {
  StandardSequent s = Standardize(k).sequent;
  return Elementarize(Desequentize(s), s.kind);
}

nlohmann::json GameFormToJson(const GameForm& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : g.sequent.rows) {
    rows.push_back({{"X", r.x}, {"Y", r.y}, {"Z", r.z}, {"P", r.p}, {"Q", r.q}, {"R", r.r}});
  }
  return {{"kind", ImpKindName(g.sequent.kind)},
          {"s", g.sequent.s()},
          {"rows", rows},
          {"W", g.sequent.w},
          {"letters", g.letters},
          {"formula", g.formula.str()},
          {"elementary", g.ElementaryString()}};
}

GameForm GameFormFromJson(const nlohmann::json& j) {
  StandardSequent s;
  s.kind = ParseImpKind(j.at("kind").get<std::string>());
  s.w = j.at("W").get<std::string>();
  for (const auto& r : j.at("rows")) {
    s.rows.push_back(StandardRow{r.at("X"), r.at("Y"), r.at("Z"),
                                 r.at("P"), r.at("Q"), r.at("R")});
  }
  if (j.contains("s") && j.at("s").get<std::size_t>() != s.s()) {
    throw std::invalid_argument("game form: s does not match the rows");
  }
  GameForm g = Elementarize(Desequentize(s), s.kind);
  if (j.contains("letters") &&
      j.at("letters").get<std::map<std::string, std::string>>() != g.letters) {
    throw std::invalid_argument("game form: letters do not match the atoms");
  }
  return g;
}

KripkeModel ExtendWithNames(const KripkeModel& m, const Standardization& st) {
  KripkeModel out = m;
  for (std::size_t w = 0; w < m.size(); ++w) {
    for (const auto& [g, name] : st.names.entries) {
      if (Force(m, w, g)) out.val[w].insert(name);
    }
  }
  return out;
}

DesequentizationProofs BuildDesequentizationProofs(const IntFormula& k) {
  const Standardization st = Standardize(k);
  const StandardSequent& seq = st.sequent;
  const ImpKind kind = seq.kind;
  const IntSequent gw = seq.ToSequent();
  const std::size_t n = seq.s();

  // K o (G1 o .. (G2s o W)) is provable, as K, G1..G2s => W is.
  IntFormula t = gw.succedent;
  for (auto it = gw.antecedent.rbegin(); it != gw.antecedent.rend(); ++it) {
    t = IntFormula::Imp(kind, *it, t);
  }
  t = IntFormula::Imp(kind, k, t);
  SearchOutcome out = IntProve(IntSequent{{}, t});
  if (!out.proved()) throw std::logic_error("standard sequent is not provable");
  AffineProof split = RecurrentSplitProof(kind, k, gw.antecedent, gw.succedent);
  AffineProof chain = affine::Cut(Embed(*out.proof, kind), split);

  DesequentizationProofs r{chain, nullptr, nullptr, Conc1(chain).child(1),
                           IntendedMeaning(seq)};
  if (n == 0) {
    r.uncurried = Identity(r.intended);
    r.to_d = Identity(r.intended);
    return r;
  }

  // Uncurry one X row at a time, going backwards from the intended meaning so that every
  // replacement is at a negative occurrence.
  AffineFormula host = r.intended;
  AffineProof acc;
  for (std::size_t j = 0; j < n; ++j) {
    const Path path{0, j, 0};
    const AffineFormula g1 = SubformulaAt(host, path);
    const AffineFormula g2 = SubformulaAt(r.split, path);
    AffineProof pf = CurryProof(g1.child(0).child(0), g1.child(0).child(1), g1.child(1));
    AffineProof step = ReplaceProof(g1, g2, pf, host, path);
    acc = acc ? ComposeImplications(step, acc) : step;
    host = ReplaceAt(host, path, g2);
  }
  r.uncurried = Restated(acc, AffineFormula::Limp(r.split, r.intended));

  // Derelictions at the 3s positive recurrences that D omits.
  host = r.intended;
  acc = nullptr;
  const std::vector<Path> paths = InsertedRecurrencePaths(seq);
  for (auto it = paths.rbegin(); it != paths.rend(); ++it) {
    const AffineFormula g1 = SubformulaAt(host, *it);
    const AffineFormula g2 = g1.child(0);
    AffineProof step = ReplaceProof(g1, g2, DerelictionProof(kind, g2), host, *it);
    acc = acc ? ComposeImplications(acc, step) : step;
    host = ReplaceAt(host, *it, g2);
  }
  if (host != Desequentize(seq)) throw std::logic_error("replacements do not reach D");
  r.to_d = acc;
  return r;
}

}  // namespace clint
