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

#include <stdexcept>
#include <unordered_map>

#include "clint/calculus.hpp"

namespace clint {

using affine::Axiom;
using affine::CoIntro;
using affine::ConjIntro;
using affine::Contract;
using affine::DisjIntro;
using affine::Exchange;
using affine::Move;
using affine::Normalize;
using affine::Permute;
using affine::RecurIntro;
using affine::Weaken;

namespace {

AffineOp RecurOp(ImpKind kind) {
  return kind == ImpKind::kBimp ? AffineOp::kBrecur : AffineOp::kPrecur;
}

AffineOp CoOp(ImpKind kind) {
  return kind == ImpKind::kBimp ? AffineOp::kCobrecur : AffineOp::kCoprecur;
}

AffineOp Dual(AffineOp op) {
  switch (op) {
    case AffineOp::kBrecur: return AffineOp::kCobrecur;
    case AffineOp::kCobrecur: return AffineOp::kBrecur;
    case AffineOp::kPrecur: return AffineOp::kCoprecur;
    case AffineOp::kCoprecur: return AffineOp::kPrecur;
    default: throw std::logic_error("no dual");
  }
}

AffineFormula Ctx(ImpKind kind, const IntFormula& f) {
  return AffineFormula::Neg(Recur(kind, Translate(f)));
}

const AffineSequent& Conc(const AffineProof& p) { return p->conclusion; }

// Re-states a two-formula conclusion in another written form (two exchanges).
AffineProof Restate(const AffineProof& p, const AffineSequent& written) {
  AffineProof q = Exchange(p, 0);
  return MakeAffineProof(written, AffineRule::kExchange, {0}, {q});
}

bool FindKind(const IntFormula& f, ImpKind* kind) {
  if (f.is_atom()) return false;
  *kind = f.kind();
  return true;
}

//------------------------------------------------------------------------------
// Embedding.  The left rule is handled by tracing the occurrence of ~!F' in
// the embedded left premise up to where it was introduced and substituting
// ~!(K2 o F)' there, which avoids a cut against !F'.

class Embedder {
 public:
  explicit Embedder(ImpKind kind) : kind_(kind) {}

  AffineProof Run(const IntProof& p) {
    if (auto it = memo_.find(p.get()); it != memo_.end()) return it->second;
    AffineProof out = Step(*p);
    memo_.emplace(p.get(), out);
    return out;
  }

 private:
  AffineProof Step(const IntProofNode& n) {
    const auto& c = n.conclusion;
    switch (n.rule) {
      case IntRule::kAxiom: {
        AffineFormula k = Translate(c.succedent);
        AffineProof q = Exchange(Axiom(k), 0);
        q = CoIntro(q, CoOp(kind_), Ctx(kind_, c.succedent));
        return Exchange(q, 0);
      }
      case IntRule::kExchange:
        return Exchange(Run(n.premises[0]), n.indices[0]);
      case IntRule::kWeakening: {
        AffineProof q = Weaken(Run(n.premises[0]), Ctx(kind_, c.antecedent.back()));
        return Exchange(q, Conc(q).size() - 2);
      }
      case IntRule::kContraction: {
        AffineProof q = Run(n.premises[0]);
        std::size_t m = Conc(q).size();
        q = Move(q, m - 1, m - 3);
        q = Contract(q);
        return Exchange(q, m - 3);
      }
      case IntRule::kRightImp:
        return DisjIntro(Run(n.premises[0]), 2, Translate(c.succedent));
      case IntRule::kLeftImp: {
        AffineProof left = Run(n.premises[0]);
        AffineProof right = Run(n.premises[1]);
        AffineProof rho = RecurIntro(right, RecurOp(kind_));
        const IntFormula& imp = c.antecedent.back();
        AffineFormula d = Ctx(kind_, imp);
        std::size_t g = n.indices[0];
        AffineProof t = Trace(left, g, d, rho);
        return Normalize(t, TranslateSequent(c, kind_));
      }
    }
    throw std::logic_error("bad rule");
  }

  // Proof of Conc(p) with position i replaced by d, followed by the context
  // of rho.  Position i must be a ?-formula whose body is the dual of the
  // body of rho's last formula's partner in d.
  AffineProof Trace(const AffineProof& p, std::size_t i, const AffineFormula& d,
                    const AffineProof& rho) {
    const AffineProofNode& n = *p;
    const AffineSequent& c = n.conclusion;
    const std::size_t last = c.size() - 1;
    AffineSequent theta(Conc(rho).begin(), Conc(rho).end() - 1);

    auto target = [&]() {
      AffineSequent s = c;
      s[i] = d;
      s.insert(s.end(), theta.begin(), theta.end());
      return s;
    };

    // Re-applies a one-premise rule whose active formulas are the last k of
    // the premise, after the premise has been traced at position pi.
    auto around = [&](std::size_t pi, std::size_t k) {
      AffineProof q = Trace(n.premises[0], pi, d, rho);
      std::size_t plen = Conc(n.premises[0]).size();
      for (std::size_t r = 0; r < k; ++r) {
        q = Move(q, plen - k, Conc(q).size() - 1);
      }
      switch (n.rule) {
        case AffineRule::kUcContr:
        case AffineRule::kWcContr:
          q = Contract(q);
          break;
        case AffineRule::kParDisjIntro:
          q = DisjIntro(q, k, c.back());
          break;
        case AffineRule::kUcIntro:
        case AffineRule::kWcIntro:
          q = CoIntro(q, Expand(c.back()).op(), c.back());
          break;
        case AffineRule::kPrecurIntro:
        case AffineRule::kBrecurIntro:
          q = RecurIntro(q, Expand(c.back()).op(), c.back());
          break;
        default:
          throw std::logic_error("unexpected rule");
      }
      return Move(q, Conc(q).size() - 1, last);
    };

    switch (n.rule) {
      case AffineRule::kAxiom: {
        // Expand the axiom one level so that the occurrence is introduced by
        // a ?-rule.
        const AffineFormula z = c[i];
        const AffineFormula o = c[1 - i];
        AffineOp co = Expand(z).op();
        AffineFormula body = Expand(z).child(0);
        AffineProof q = CoIntro(Axiom(body), co, z);
        q = Exchange(q, 0);
        q = RecurIntro(q, Dual(co), o);
        if (i == 1) q = Exchange(q, 0);
        return Trace(q, i, d, rho);
      }
      case AffineRule::kExchange: {
        std::size_t j = n.indices[0];
        std::size_t pi = i == j ? j + 1 : (i == j + 1 ? j : i);
        return Exchange(Trace(n.premises[0], pi, d, rho), j);
      }
      case AffineRule::kWeakening: {
        if (i == last) {
          AffineProof q = Weaken(n.premises[0], d);
          for (const auto& f : theta) q = Weaken(q, f);
          return q;
        }
        AffineProof q = Weaken(Trace(n.premises[0], i, d, rho), c.back());
        return Move(q, Conc(q).size() - 1, last);
      }
      case AffineRule::kUcContr:
      case AffineRule::kWcContr: {
        if (i == last) {
          AffineProof q = Trace(n.premises[0], last, d, rho);
          q = Trace(q, last + 1, d, rho);
          return Normalize(q, target());
        }
        return around(i, 2);
      }
      case AffineRule::kParDisjIntro: {
        if (i == last) throw std::logic_error("traced formula is a disjunction");
        return around(i, n.indices[0]);
      }
      case AffineRule::kUcIntro:
      case AffineRule::kWcIntro: {
        if (i == last) {
          AffineProof conj = ConjIntro({rho, n.premises[0]});
          AffineProof q = CoIntro(conj, Expand(d).op(), d);
          return Permute(q, target());
        }
        return around(i, 1);
      }
      case AffineRule::kPrecurIntro:
      case AffineRule::kBrecurIntro:
        if (i == last) throw std::logic_error("traced formula is a recurrence");
        return around(i, 1);
      case AffineRule::kParConjIntro: {
        if (i == last) throw std::logic_error("traced formula is a conjunction");
        std::vector<AffineProof> premises = n.premises;
        std::size_t off = 0;
        for (auto& pk : premises) {
          std::size_t len = Conc(pk).size() - 1;
          if (i < off + len) {
            AffineProof q = Trace(pk, i - off, d, rho);
            pk = Move(q, len, Conc(q).size() - 1);
            break;
          }
          off += len;
        }
        return Permute(ConjIntro(premises, c.back()), target());
      }
      case AffineRule::kCut:
        throw std::logic_error("cannot trace through a cut");
    }
    throw std::logic_error("bad rule");
  }

  ImpKind kind_;
  std::unordered_map<const IntProofNode*, AffineProof> memo_;
};

//------------------------------------------------------------------------------
// Replacement

struct Replacer {
  AffineFormula g2;
  AffineProof base;  // <~G1, G2>

  // Proof of <~S, D> with (S, D) = (h, h2) for a positive occurrence and
  // (h2, h) for a negative one, h2 being h with the occurrence replaced.
  AffineProof Run(const AffineFormula& h, const Path& path, std::size_t at) {
    if (at == path.size()) return base;
    Path rest(path.begin() + static_cast<std::ptrdiff_t>(at), path.end());
    const bool positive = PolarityAt(h, rest) == Polarity::kPositive;
    const AffineFormula h2 = ReplaceAt(h, rest, g2);
    const AffineFormula& s = positive ? h : h2;
    const AffineFormula& dd = positive ? h2 : h;
    const AffineSequent written{AffineFormula::Neg(s), dd};
    const std::size_t k = path[at];

    switch (h.op()) {
      case AffineOp::kAtom:
        throw std::invalid_argument("path leaves the formula");
      case AffineOp::kNeg: {
        AffineProof inner = Run(h.child(0), path, at + 1);
        return MakeAffineProof(written, AffineRule::kExchange, {0}, {inner});
      }
      case AffineOp::kBrecur:
      case AffineOp::kPrecur: {
        AffineProof q = Exchange(Run(h.child(0), path, at + 1), 0);
        q = CoIntro(q, Dual(h.op()), written[0]);
        q = Exchange(q, 0);
        return RecurIntro(q, h.op(), dd);
      }
      case AffineOp::kCobrecur:
      case AffineOp::kCoprecur: {
        AffineProof q = CoIntro(Run(h.child(0), path, at + 1), h.op(), dd);
        q = Exchange(q, 0);
        q = RecurIntro(q, Dual(h.op()), written[0]);
        return Exchange(q, 0);
      }
      case AffineOp::kParConj: {
        std::vector<AffineProof> ps;
        for (std::size_t j = 0; j < h.children().size(); ++j) {
          ps.push_back(j == k ? Run(h.child(j), path, at + 1) : Axiom(h.child(j)));
        }
        AffineProof q = ConjIntro(ps, dd);
        q = Move(q, Conc(q).size() - 1, 0);
        q = DisjIntro(q, ps.size(), written[0]);
        return Exchange(q, 0);
      }
      case AffineOp::kParDisj: {
        std::vector<AffineProof> ps;
        for (std::size_t j = 0; j < h.children().size(); ++j) {
          ps.push_back(j == k ? Exchange(Run(h.child(j), path, at + 1), 0)
                              : Exchange(Axiom(h.child(j)), 0));
        }
        AffineProof q = ConjIntro(ps, written[0]);
        q = Move(q, Conc(q).size() - 1, 0);
        return DisjIntro(q, ps.size(), dd);
      }
      case AffineOp::kLimp: {
        AffineFormula v = AffineFormula::ParDisj(
            {AffineFormula::Neg(h.child(0)), h.child(1)});
        Path vp{k};
        if (k == 0) vp.push_back(0);
        vp.insert(vp.end(), path.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                  path.end());
        Replacer sub{g2, base};
        return Restate(sub.Run(v, vp, 0), written);
      }
    }
    throw std::logic_error("bad op");
  }
};

// Reads a single-formula implication A -> B or ~A | B.
std::pair<AffineFormula, AffineFormula> ImplicationParts(const AffineProof& p) {
  if (Conc(p).size() != 1) {
    throw std::invalid_argument("expected a single-formula conclusion");
  }
  const AffineFormula& f = Conc(p)[0];
  if (f.op() == AffineOp::kLimp) return {f.child(0), f.child(1)};
  if (f.op() == AffineOp::kParDisj && f.children().size() == 2) {
    const AffineFormula& a = f.child(0);
    return {a.op() == AffineOp::kNeg ? a.child(0) : Negate(a), f.child(1)};
  }
  throw std::invalid_argument("conclusion is not an implication: " + f.str());
}

}  // namespace

ImpKind SequentKind(const IntSequent& s) {
  ImpKind kind = ImpKind::kBimp;
  for (const auto& f : s.antecedent) {
    if (FindKind(f, &kind)) return kind;
  }
  FindKind(s.succedent, &kind);
  return kind;
}

AffineSequent TranslateSequent(const IntSequent& s, ImpKind kind) {
  AffineSequent out;
  for (const auto& f : s.antecedent) out.push_back(Ctx(kind, f));
  out.push_back(Translate(s.succedent));
  return out;
}

AffineProof Embed(const IntProof& proof) {
  return Embed(proof, SequentKind(proof->conclusion));
}

AffineProof Embed(const IntProof& proof, ImpKind kind) {
  std::string why;
  if (!CheckInt(proof, &why)) throw std::invalid_argument("invalid proof: " + why);
  return Embedder(kind).Run(proof);
}

AffineProof DerelictionProof(ImpKind kind, const AffineFormula& e) {
  AffineProof q = Exchange(Axiom(e), 0);
  q = CoIntro(q, CoOp(kind), AffineFormula::Neg(Recur(kind, e)));
  q = Exchange(q, 0);
  return DisjIntro(q, 2, AffineFormula::Limp(Recur(kind, e), e));
}

AffineProof RecurrentSplitProof(ImpKind kind, const IntFormula& k,
                                const std::vector<IntFormula>& gs,
                                const IntFormula& w) {
  IntFormula t = w;
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) t = IntFormula::Imp(kind, *it, t);
  t = IntFormula::Imp(kind, k, t);

  const AffineFormula wp = Translate(w);
  const AffineFormula kr = Recur(kind, Translate(k));
  std::vector<AffineFormula> as;
  for (const auto& g : gs) as.push_back(Recur(kind, Translate(g)));

  AffineProof q = Exchange(Axiom(wp), 0);  // W', ~W'
  std::vector<AffineFormula> chain{kr};
  chain.insert(chain.end(), as.begin(), as.end());
  for (std::size_t idx = chain.size(); idx-- > 0;) {
    std::optional<AffineFormula> written;
    if (idx == 0) written = AffineFormula::Neg(Translate(t));
    q = ConjIntro({Axiom(chain[idx]), q}, written);
  }
  // ~Kr, ~A1..~An, W', C
  const std::size_t n = as.size();
  q = Move(q, Conc(q).size() - 1, 0);
  if (n == 0) return DisjIntro(q, 2, AffineFormula::Limp(kr, wp));
  q = Move(q, Conc(q).size() - 1, 2);  // C, ~Kr, W', ~A1..~An
  AffineFormula conj = n == 1 ? as[0] : AffineFormula::ParConj(as);
  if (n >= 2) q = DisjIntro(q, n, AffineFormula::Neg(conj));
  q = Exchange(q, 2);
  AffineFormula inner = AffineFormula::Limp(conj, wp);
  q = DisjIntro(q, 2, inner);
  return DisjIntro(q, 2, AffineFormula::Limp(kr, inner));
}

AffineProof SplitImplication(const AffineProof& ab, const AffineFormula& a,
                             const AffineFormula& b) {
  if (ab->rule == AffineRule::kParDisjIntro && ab->indices == std::vector<std::size_t>{2} &&
      Conc(ab->premises[0]).size() == 2) {
    return Restate(ab->premises[0], {AffineFormula::Neg(a), b});
  }
  AffineProof l = Axiom(a);                 // ~A, A
  AffineProof r = Exchange(Axiom(b), 0);    // B, ~B
  AffineProof q = ConjIntro({l, r}, AffineFormula::Neg(AffineFormula::Limp(a, b)));
  q = Move(q, 2, 0);
  return affine::Cut(ab, q);
}

AffineProof ComposeImplications(const AffineProof& ab, const AffineProof& bc) {
  auto [a, b] = ImplicationParts(ab);
  auto [b2, c] = ImplicationParts(bc);
  if (Expand(b) != Expand(b2)) {
    throw std::invalid_argument("implications do not compose");
  }
  AffineProof left = SplitImplication(ab, a, b);
  AffineProof right = SplitImplication(bc, b2, c);
  AffineProof q = affine::Cut(left, right);
  return DisjIntro(q, 2, AffineFormula::Limp(a, c));
}

AffineProof ReplaceProof(const AffineFormula& g1, const AffineFormula& g2,
                         const AffineProof& pf, const AffineFormula& host1,
                         const Path& path) {
  const AffineFormula* occ = nullptr;
  try {
    occ = &SubformulaAt(host1, path);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("path leaves the host formula");
  }
  if (*occ != g1) {
    throw std::invalid_argument("occurrence at path is " + occ->str() +
                                ", not " + g1.str());
  }
  std::string why;
  if (!CheckAffine(pf, &why)) throw std::invalid_argument("invalid proof: " + why);
  auto [a, b] = ImplicationParts(pf);
  if (Expand(a) != Expand(g1) || Expand(b) != Expand(g2)) {
    throw std::invalid_argument("proof does not conclude the replacement");
  }
  Replacer rep{g2, SplitImplication(pf, g1, g2)};
  AffineProof q = rep.Run(host1, path, 0);
  const bool positive = PolarityAt(host1, path) == Polarity::kPositive;
  AffineFormula host2 = ReplaceAt(host1, path, g2);
  return DisjIntro(q, 2, positive ? AffineFormula::Limp(host1, host2)
                                  : AffineFormula::Limp(host2, host1));
}

}  // namespace clint
