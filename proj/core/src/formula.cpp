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

#include "clint/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace clint {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at offset " + std::to_string(position)),
      position_(position) {}

bool IsValidAtomName(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      return false;
    }
  }
  return true;
}

bool IsReservedAtomName(std::string_view name) {
  return name.size() >= 2 && name[0] == '_' && name[1] == 'w';
}

const char* ImpKindName(ImpKind kind) {
  return kind == ImpKind::kBimp ? "bimp" : "pimp";
}

ImpKind ParseImpKind(std::string_view text) {
  if (text == "bimp") return ImpKind::kBimp;
  if (text == "pimp") return ImpKind::kPimp;
  throw std::invalid_argument("unknown implication kind '" +
                              std::string(text) + "'");
}

static const char* ImpToken(ImpKind kind) {
  return kind == ImpKind::kBimp ? "-o" : "->>";
}

//------------------------------------------------------------------------------
// IntFormula

struct IntFormula::Node {
  std::string text;
  std::string name;
  ImpKind kind = ImpKind::kBimp;
  std::vector<IntFormula> kids;
  std::size_t imps = 0;
};

IntFormula IntFormula::Atom(std::string name) {
  if (!IsValidAtomName(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->text = name;
  node->name = std::move(name);
  return IntFormula(std::move(node));
}

IntFormula IntFormula::Imp(ImpKind kind, IntFormula left, IntFormula right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  if (left.is_atom()) {
    node->text = left.str();
  } else {
    node->text = "(" + left.str() + ")";
  }
  node->text += " ";
  node->text += ImpToken(kind);
  node->text += " ";
  node->text += right.str();
  node->imps = 1 + left.implication_count() + right.implication_count();
  node->kids = {std::move(left), std::move(right)};
  return IntFormula(std::move(node));
}

bool IntFormula::is_atom() const { return node_->kids.empty(); }
const std::string& IntFormula::name() const { return node_->name; }
ImpKind IntFormula::kind() const { return node_->kind; }
const IntFormula& IntFormula::left() const { return node_->kids.at(0); }
const IntFormula& IntFormula::right() const { return node_->kids.at(1); }
const std::string& IntFormula::str() const { return node_->text; }
std::size_t IntFormula::implication_count() const { return node_->imps; }

bool CanonicalLess(const IntFormula& a, const IntFormula& b) {
  const std::string& x = a.str();
  const std::string& y = b.str();
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::string IntSequent::str() const {
  std::string out;
  for (std::size_t i = 0; i < antecedent.size(); ++i) {
    if (i > 0) out += ", ";
    out += antecedent[i].str();
  }
  if (!antecedent.empty()) out += " ";
  out += "=> ";
  out += succedent.str();
  return out;
}

std::vector<IntFormula> CanonicalOrder(std::vector<IntFormula> formulas) {
  std::sort(formulas.begin(), formulas.end(), CanonicalLess);
  formulas.erase(std::unique(formulas.begin(), formulas.end()),
                 formulas.end());
  return formulas;
}

static void CollectSubformulas(const IntFormula& f,
                               std::unordered_set<std::string>& seen,
                               std::vector<IntFormula>& out) {
  if (!seen.insert(f.str()).second) return;
  out.push_back(f);
  if (!f.is_atom()) {
    CollectSubformulas(f.left(), seen, out);
    CollectSubformulas(f.right(), seen, out);
  }
}

std::vector<IntFormula> Subformulas(const IntFormula& f) {
  std::unordered_set<std::string> seen;
  std::vector<IntFormula> out;
  CollectSubformulas(f, seen, out);
  return CanonicalOrder(std::move(out));
}

std::vector<std::string> AtomsOf(const IntFormula& f) {
  std::set<std::string> atoms;
  std::vector<const IntFormula*> stack = {&f};
  while (!stack.empty()) {
    const IntFormula* g = stack.back();
    stack.pop_back();
    if (g->is_atom()) {
      atoms.insert(g->name());
    } else {
      stack.push_back(&g->left());
      stack.push_back(&g->right());
    }
  }
  return {atoms.begin(), atoms.end()};
}

IntFormula WithKind(const IntFormula& f, ImpKind kind) {
  if (f.is_atom()) return f;
  return IntFormula::Imp(kind, WithKind(f.left(), kind),
                         WithKind(f.right(), kind));
}

bool HasUniformKind(const IntFormula& f, ImpKind kind) {
  if (f.is_atom()) return true;
  return f.kind() == kind && HasUniformKind(f.left(), kind) &&
         HasUniformKind(f.right(), kind);
}

//------------------------------------------------------------------------------
// Tokenizer shared by both languages

namespace {

enum class Tok {
  kIdent,
  kLParen,
  kRParen,
  kBimp,
  kPimp,
  kLimp,
  kAnd,
  kOr,
  kNeg,
  kBang,   // !b
  kQuery,  // ?b
  kPbang,  // !p
  kPquery, // ?p
  kComma,
  kTurnstile,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> Tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)),
                     start});
      continue;
    }
    auto at = [&](std::string_view lit) {
      return s.substr(i, lit.size()) == lit;
    };
    if (at("->>")) {
      out.push_back({Tok::kPimp, "->>", start});
      i += 3;
    } else if (at("->")) {
      out.push_back({Tok::kLimp, "->", start});
      i += 2;
    } else if (at("-o")) {
      out.push_back({Tok::kBimp, "-o", start});
      i += 2;
    } else if (at("=>")) {
      out.push_back({Tok::kTurnstile, "=>", start});
      i += 2;
    } else if (at("!b")) {
      out.push_back({Tok::kBang, "!b", start});
      i += 2;
    } else if (at("?b")) {
      out.push_back({Tok::kQuery, "?b", start});
      i += 2;
    } else if (at("!p")) {
      out.push_back({Tok::kPbang, "!p", start});
      i += 2;
    } else if (at("?p")) {
      out.push_back({Tok::kPquery, "?p", start});
      i += 2;
    } else if (c == '(') {
      out.push_back({Tok::kLParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::kRParen, ")", start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::kAnd, "&", start});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::kOr, "|", start});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::kNeg, "~", start});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::kComma, ",", start});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Cursor {
 public:
  Cursor(std::string_view text, bool allow_reserved)
      : toks_(Tokenize(text)), allow_reserved_(allow_reserved) {}
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what, peek().pos);
    }
    next();
  }
  std::string atom_name() {
    const Token& t = peek();
    if (t.kind != Tok::kIdent) {
      throw ParseError("expected atom or '('", t.pos);
    }
    if (!allow_reserved_ && IsReservedAtomName(t.text)) {
      throw ParseError("atom name '" + t.text + "' uses the reserved _w prefix",
                       t.pos);
    }
    return next().text;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool allow_reserved_;
};

IntFormula ParseIntExpr(Cursor& cur, ImpKind kind);

IntFormula ParseIntPrimary(Cursor& cur, ImpKind kind) {
  if (cur.peek().kind == Tok::kLParen) {
    cur.next();
    IntFormula f = ParseIntExpr(cur, kind);
    cur.expect(Tok::kRParen, "')'");
    return f;
  }
  return IntFormula::Atom(cur.atom_name());
}

IntFormula ParseIntExpr(Cursor& cur, ImpKind kind) {
  IntFormula left = ParseIntPrimary(cur, kind);
  Tok want = kind == ImpKind::kBimp ? Tok::kBimp : Tok::kPimp;
  const Token& t = cur.peek();
  if (t.kind == want) {
    cur.next();
    return IntFormula::Imp(kind, left, ParseIntExpr(cur, kind));
  }
  switch (t.kind) {
    case Tok::kBimp:
    case Tok::kPimp:
    case Tok::kLimp:
    case Tok::kAnd:
    case Tok::kOr:
    case Tok::kNeg:
    case Tok::kBang:
    case Tok::kQuery:
    case Tok::kPbang:
    case Tok::kPquery:
      throw ParseError("operator '" + t.text + "' not allowed in a " +
                           ImpKindName(kind) + " formula",
                       t.pos);
    default:
      return left;
  }
}

void ExpectEnd(Cursor& cur) {
  if (cur.peek().kind != Tok::kEnd) {
    throw ParseError("unexpected '" + cur.peek().text + "'", cur.peek().pos);
  }
}

}  // namespace

IntFormula ParseIntFormula(std::string_view text, ImpKind kind,
                           bool allow_reserved) {
  Cursor cur(text, allow_reserved);
  IntFormula f = ParseIntExpr(cur, kind);
  ExpectEnd(cur);
  return f;
}

IntSequent ParseIntSequent(std::string_view text, ImpKind kind,
                           bool allow_reserved) {
  Cursor cur(text, allow_reserved);
  std::vector<IntFormula> ante;
  if (cur.peek().kind != Tok::kTurnstile) {
    ante.push_back(ParseIntExpr(cur, kind));
    while (cur.peek().kind == Tok::kComma) {
      cur.next();
      ante.push_back(ParseIntExpr(cur, kind));
    }
  }
  cur.expect(Tok::kTurnstile, "'=>'");
  IntFormula succ = ParseIntExpr(cur, kind);
  ExpectEnd(cur);
  return IntSequent{std::move(ante), std::move(succ)};
}

IntSequent ParseIntInput(std::string_view text, ImpKind kind,
                         bool allow_reserved) {
  if (text.find("=>") != std::string_view::npos) {
    return ParseIntSequent(text, kind, allow_reserved);
  }
  return IntSequent{{}, ParseIntFormula(text, kind, allow_reserved)};
}

//------------------------------------------------------------------------------
// AffineFormula

struct AffineFormula::Node {
  AffineOp op = AffineOp::kAtom;
  std::string name;
  std::vector<AffineFormula> kids;
  std::string text;
};

static bool IsTight(const AffineFormula& f) {
  switch (f.op()) {
    case AffineOp::kAtom:
    case AffineOp::kNeg:
    case AffineOp::kBrecur:
    case AffineOp::kCobrecur:
    case AffineOp::kPrecur:
    case AffineOp::kCoprecur:
      return true;
    default:
      return false;
  }
}

static std::string Wrapped(const AffineFormula& f) {
  return IsTight(f) ? f.str() : "(" + f.str() + ")";
}

static const char* PrefixToken(AffineOp op) {
  switch (op) {
    case AffineOp::kNeg:
      return "~";
    case AffineOp::kBrecur:
      return "!b ";
    case AffineOp::kCobrecur:
      return "?b ";
    case AffineOp::kPrecur:
      return "!p ";
    case AffineOp::kCoprecur:
      return "?p ";
    default:
      return "";
  }
}

AffineFormula AffineFormula::Make(AffineOp op,
                                  std::vector<AffineFormula> children) {
  auto node = std::make_shared<Node>();
  node->op = op;
  switch (op) {
    case AffineOp::kAtom:
      throw std::invalid_argument("use AffineFormula::Atom for atoms");
    case AffineOp::kParConj:
    case AffineOp::kParDisj: {
      if (children.size() < 2) {
        throw std::invalid_argument("parallel connective needs arity >= 2");
      }
      const char* sep = op == AffineOp::kParConj ? " & " : " | ";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i > 0) node->text += sep;
        node->text += Wrapped(children[i]);
      }
      break;
    }
    case AffineOp::kLimp: {
      if (children.size() != 2) {
        throw std::invalid_argument("limp needs two children");
      }
      node->text = Wrapped(children[0]) + " -> ";
      const AffineFormula& r = children[1];
      node->text += r.op() == AffineOp::kLimp ? r.str() : Wrapped(r);
      break;
    }
    default:
      if (children.size() != 1) {
        throw std::invalid_argument("unary connective needs one child");
      }
      node->text = std::string(PrefixToken(op)) + Wrapped(children[0]);
      break;
  }
  node->kids = std::move(children);
  return AffineFormula(std::move(node));
}

AffineFormula AffineFormula::Atom(std::string name) {
  if (!IsValidAtomName(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->text = name;
  node->name = std::move(name);
  return AffineFormula(std::move(node));
}

AffineFormula AffineFormula::Neg(AffineFormula f) {
  return Make(AffineOp::kNeg, {std::move(f)});
}
AffineFormula AffineFormula::ParConj(std::vector<AffineFormula> parts) {
  return Make(AffineOp::kParConj, std::move(parts));
}
AffineFormula AffineFormula::ParDisj(std::vector<AffineFormula> parts) {
  return Make(AffineOp::kParDisj, std::move(parts));
}
AffineFormula AffineFormula::Limp(AffineFormula left, AffineFormula right) {
  return Make(AffineOp::kLimp, {std::move(left), std::move(right)});
}
AffineFormula AffineFormula::Brecur(AffineFormula f) {
  return Make(AffineOp::kBrecur, {std::move(f)});
}
AffineFormula AffineFormula::Cobrecur(AffineFormula f) {
  return Make(AffineOp::kCobrecur, {std::move(f)});
}
AffineFormula AffineFormula::Precur(AffineFormula f) {
  return Make(AffineOp::kPrecur, {std::move(f)});
}
AffineFormula AffineFormula::Coprecur(AffineFormula f) {
  return Make(AffineOp::kCoprecur, {std::move(f)});
}

AffineOp AffineFormula::op() const { return node_->op; }
const std::string& AffineFormula::name() const { return node_->name; }
const std::vector<AffineFormula>& AffineFormula::children() const {
  return node_->kids;
}
const AffineFormula& AffineFormula::child(std::size_t i) const {
  return node_->kids.at(i);
}
const std::string& AffineFormula::str() const { return node_->text; }

bool operator==(const AffineFormula& a, const AffineFormula& b) {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

std::string AffineSequentString(const AffineSequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += s[i].str();
  }
  return out;
}

namespace {

AffineFormula ParseAffineExpr(Cursor& cur);

AffineFormula ParseAffineUnary(Cursor& cur) {
  const Token& t = cur.peek();
  switch (t.kind) {
    case Tok::kNeg:
      cur.next();
      return AffineFormula::Neg(ParseAffineUnary(cur));
    case Tok::kBang:
      cur.next();
      return AffineFormula::Brecur(ParseAffineUnary(cur));
    case Tok::kQuery:
      cur.next();
      return AffineFormula::Cobrecur(ParseAffineUnary(cur));
    case Tok::kPbang:
      cur.next();
      return AffineFormula::Precur(ParseAffineUnary(cur));
    case Tok::kPquery:
      cur.next();
      return AffineFormula::Coprecur(ParseAffineUnary(cur));
    case Tok::kLParen: {
      cur.next();
      AffineFormula f = ParseAffineExpr(cur);
      cur.expect(Tok::kRParen, "')'");
      return f;
    }
    default:
      return AffineFormula::Atom(cur.atom_name());
  }
}

AffineFormula ParseAffineNary(Cursor& cur) {
  AffineFormula first = ParseAffineUnary(cur);
  Tok op = cur.peek().kind;
  if (op != Tok::kAnd && op != Tok::kOr) return first;
  std::vector<AffineFormula> parts = {first};
  while (cur.peek().kind == Tok::kAnd || cur.peek().kind == Tok::kOr) {
    if (cur.peek().kind != op) {
      throw ParseError("mixed '&' and '|' need parentheses", cur.peek().pos);
    }
    cur.next();
    parts.push_back(ParseAffineUnary(cur));
  }
  return op == Tok::kAnd ? AffineFormula::ParConj(std::move(parts))
                         : AffineFormula::ParDisj(std::move(parts));
}

AffineFormula ParseAffineExpr(Cursor& cur) {
  AffineFormula left = ParseAffineNary(cur);
  const Token& t = cur.peek();
  if (t.kind == Tok::kLimp) {
    cur.next();
    return AffineFormula::Limp(left, ParseAffineExpr(cur));
  }
  if (t.kind == Tok::kBimp || t.kind == Tok::kPimp) {
    throw ParseError("operator '" + t.text +
                         "' belongs to the intuitionistic language",
                     t.pos);
  }
  return left;
}

}  // namespace

AffineFormula ParseAffineFormula(std::string_view text, bool allow_reserved) {
  Cursor cur(text, allow_reserved);
  AffineFormula f = ParseAffineExpr(cur);
  ExpectEnd(cur);
  return f;
}

AffineSequent ParseAffineSequent(std::string_view text, bool allow_reserved) {
  Cursor cur(text, allow_reserved);
  AffineSequent out;
  if (cur.peek().kind == Tok::kEnd) return out;
  out.push_back(ParseAffineExpr(cur));
  while (cur.peek().kind == Tok::kComma) {
    cur.next();
    out.push_back(ParseAffineExpr(cur));
  }
  ExpectEnd(cur);
  return out;
}

//------------------------------------------------------------------------------
// Negation normal form

AffineFormula Expand(const AffineFormula& f) {
  switch (f.op()) {
    case AffineOp::kAtom:
      return f;
    case AffineOp::kNeg:
      return Negate(f.child(0));
    case AffineOp::kLimp:
      return AffineFormula::ParDisj({Negate(f.child(0)), Expand(f.child(1))});
    default: {
      std::vector<AffineFormula> kids;
      kids.reserve(f.children().size());
      for (const AffineFormula& k : f.children()) kids.push_back(Expand(k));
      return AffineFormula::Make(f.op(), std::move(kids));
    }
  }
}

AffineFormula Negate(const AffineFormula& f) {
  switch (f.op()) {
    case AffineOp::kAtom:
      return AffineFormula::Neg(f);
    case AffineOp::kNeg:
      return Expand(f.child(0));
    case AffineOp::kLimp:
      return AffineFormula::ParConj({Expand(f.child(0)), Negate(f.child(1))});
    case AffineOp::kParConj:
    case AffineOp::kParDisj: {
      std::vector<AffineFormula> kids;
      for (const AffineFormula& k : f.children()) kids.push_back(Negate(k));
      return f.op() == AffineOp::kParConj
                 ? AffineFormula::ParDisj(std::move(kids))
                 : AffineFormula::ParConj(std::move(kids));
    }
    case AffineOp::kBrecur:
      return AffineFormula::Cobrecur(Negate(f.child(0)));
    case AffineOp::kCobrecur:
      return AffineFormula::Brecur(Negate(f.child(0)));
    case AffineOp::kPrecur:
      return AffineFormula::Coprecur(Negate(f.child(0)));
    case AffineOp::kCoprecur:
      return AffineFormula::Precur(Negate(f.child(0)));
  }
  return f;
}

//------------------------------------------------------------------------------
// Occurrences

std::string PathString(const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += ".";
    out += std::to_string(path[i]);
  }
  return out;
}

Path ParsePath(std::string_view text) {
  Path out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view part = text.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    if (part.empty() ||
        !std::all_of(part.begin(), part.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed path '" + std::string(text) +
                                  "'");
    }
    out.push_back(std::stoul(std::string(part)));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

const AffineFormula& SubformulaAt(const AffineFormula& host, const Path& path) {
  const AffineFormula* cur = &host;
  for (std::size_t idx : path) {
    if (idx >= cur->children().size()) {
      throw std::out_of_range("path " + PathString(path) +
                              " leaves the formula");
    }
    cur = &cur->child(idx);
  }
  return *cur;
}

Polarity PolarityAt(const AffineFormula& host, const Path& path) {
  const AffineFormula* cur = &host;
  bool negative = false;
  for (std::size_t idx : path) {
    if (idx >= cur->children().size()) {
      throw std::out_of_range("path " + PathString(path) +
                              " leaves the formula");
    }
    if (cur->op() == AffineOp::kNeg ||
        (cur->op() == AffineOp::kLimp && idx == 0)) {
      negative = !negative;
    }
    cur = &cur->child(idx);
  }
  return negative ? Polarity::kNegative : Polarity::kPositive;
}

static AffineFormula ReplaceFrom(const AffineFormula& host, const Path& path,
                                 std::size_t depth,
                                 const AffineFormula& replacement) {
  if (depth == path.size()) return replacement;
  std::size_t idx = path[depth];
  if (idx >= host.children().size()) {
    throw std::out_of_range("path " + PathString(path) +
                            " leaves the formula");
  }
  std::vector<AffineFormula> kids = host.children();
  kids[idx] = ReplaceFrom(kids[idx], path, depth + 1, replacement);
  return AffineFormula::Make(host.op(), std::move(kids));
}

AffineFormula ReplaceAt(const AffineFormula& host, const Path& path,
                        const AffineFormula& replacement) {
  return ReplaceFrom(host, path, 0, replacement);
}

static void CollectOccurrences(
    const AffineFormula& f, Path& path,
    std::vector<std::pair<Path, AffineFormula>>& out) {
  out.emplace_back(path, f);
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    path.push_back(i);
    CollectOccurrences(f.child(i), path, out);
    path.pop_back();
  }
}

std::vector<std::pair<Path, AffineFormula>> Occurrences(
    const AffineFormula& host) {
  std::vector<std::pair<Path, AffineFormula>> out;
  Path path;
  CollectOccurrences(host, path, out);
  return out;
}

AffineFormula Recur(ImpKind kind, AffineFormula f) {
  return kind == ImpKind::kBimp ? AffineFormula::Brecur(std::move(f))
                                : AffineFormula::Precur(std::move(f));
}

AffineFormula CoRecur(ImpKind kind, AffineFormula f) {
  return kind == ImpKind::kBimp ? AffineFormula::Cobrecur(std::move(f))
                                : AffineFormula::Coprecur(std::move(f));
}

AffineFormula Translate(const IntFormula& f) {
  if (f.is_atom()) return AffineFormula::Atom(f.name());
  return AffineFormula::ParDisj(
      {AffineFormula::Neg(Recur(f.kind(), Translate(f.left()))),
       Translate(f.right())});
}

}  // namespace clint
