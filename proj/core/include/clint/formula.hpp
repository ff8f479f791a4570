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

// Formula ASTs for the implicational intuitionistic language and the
// multiplicative-exponential affine language, plus their ASCII syntax.
//
//   -o   branching implication (intuitionistic)
//   ->>  parallel implication (intuitionistic)
//   ->   affine implication
//   & |  n-ary parallel conjunction / disjunction
//   ~    negation
//   !b ?b  branching recurrence and its dual
//   !p ?p  parallel recurrence and its dual
//
// Implications are right associative.  Atom names matching "_w..." are
// reserved for engine-generated names and rejected by the parsers.

#ifndef CLINT_FORMULA_HPP_
#define CLINT_FORMULA_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clint {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

bool IsValidAtomName(std::string_view name);
bool IsReservedAtomName(std::string_view name);

enum class ImpKind { kBimp, kPimp };

const char* ImpKindName(ImpKind kind);  // "bimp" / "pimp"
ImpKind ParseImpKind(std::string_view text);

class IntFormula {
 public:
  static IntFormula Atom(std::string name);
  static IntFormula Imp(ImpKind kind, IntFormula left, IntFormula right);

  bool is_atom() const;
  const std::string& name() const;  // atoms only
  ImpKind kind() const;             // implications only
  const IntFormula& left() const;
  const IntFormula& right() const;

  // Canonical printed form, cached at construction.
  const std::string& str() const;
  std::size_t implication_count() const;

  friend bool operator==(const IntFormula& a, const IntFormula& b) {
    return a.node_ == b.node_ || a.str() == b.str();
  }
  friend bool operator!=(const IntFormula& a, const IntFormula& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit IntFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct IntFormulaHash {
  std::size_t operator()(const IntFormula& f) const {
    return std::hash<std::string>()(f.str());
  }
};

// Order by (printed length, bytes of the printed form).
bool CanonicalLess(const IntFormula& a, const IntFormula& b);

struct IntSequent {
  std::vector<IntFormula> antecedent;
  IntFormula succedent;

  std::string str() const;
  friend bool operator==(const IntSequent& a, const IntSequent& b) {
    return a.antecedent == b.antecedent && a.succedent == b.succedent;
  }
};

// allow_reserved admits engine-generated "_w" names (used when reading back
// engine output such as serialized proofs).
IntFormula ParseIntFormula(std::string_view text, ImpKind kind,
                           bool allow_reserved = false);
IntSequent ParseIntSequent(std::string_view text, ImpKind kind,
                           bool allow_reserved = false);
// Accepts either a formula (read as "=> formula") or a sequent.
IntSequent ParseIntInput(std::string_view text, ImpKind kind,
                         bool allow_reserved = false);

// Sorted by CanonicalLess, duplicates removed.
std::vector<IntFormula> CanonicalOrder(std::vector<IntFormula> formulas);
// Distinct subformulas (atoms included), canonical order.
std::vector<IntFormula> Subformulas(const IntFormula& f);
std::vector<std::string> AtomsOf(const IntFormula& f);  // sorted, distinct
// Replaces every implication by the given kind.
IntFormula WithKind(const IntFormula& f, ImpKind kind);
// True iff every implication in f has the given kind.
bool HasUniformKind(const IntFormula& f, ImpKind kind);

enum class AffineOp {
  kAtom,
  kNeg,
  kParConj,
  kParDisj,
  kLimp,
  kBrecur,
  kCobrecur,
  kPrecur,
  kCoprecur,
};

class AffineFormula {
 public:
  static AffineFormula Atom(std::string name);
  static AffineFormula Neg(AffineFormula f);
  static AffineFormula ParConj(std::vector<AffineFormula> parts);
  static AffineFormula ParDisj(std::vector<AffineFormula> parts);
  static AffineFormula Limp(AffineFormula left, AffineFormula right);
  static AffineFormula Brecur(AffineFormula f);
  static AffineFormula Cobrecur(AffineFormula f);
  static AffineFormula Precur(AffineFormula f);
  static AffineFormula Coprecur(AffineFormula f);
  static AffineFormula Make(AffineOp op, std::vector<AffineFormula> children);

  AffineOp op() const;
  bool is_atom() const { return op() == AffineOp::kAtom; }
  const std::string& name() const;  // atoms only
  const std::vector<AffineFormula>& children() const;
  const AffineFormula& child(std::size_t i) const;

  const std::string& str() const;

  friend bool operator==(const AffineFormula& a, const AffineFormula& b);
  friend bool operator!=(const AffineFormula& a, const AffineFormula& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit AffineFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct AffineFormulaHash {
  std::size_t operator()(const AffineFormula& f) const {
    return std::hash<std::string>()(f.str());
  }
};

using AffineSequent = std::vector<AffineFormula>;
std::string AffineSequentString(const AffineSequent& s);

AffineFormula ParseAffineFormula(std::string_view text,
                                 bool allow_reserved = false);
// Comma separated; the empty string is the empty sequent.
AffineSequent ParseAffineSequent(std::string_view text,
                                 bool allow_reserved = false);

// Negation normal form: no limp, negation on atoms only.
AffineFormula Expand(const AffineFormula& f);
// The dual of f already in negation normal form, i.e. Expand(~f).
AffineFormula Negate(const AffineFormula& f);

// Child indices from the root.  Negation and the recurrences have child 0;
// limp has 0 (left) and 1 (right).
using Path = std::vector<std::size_t>;
std::string PathString(const Path& path);  // "0.1", root is ""
Path ParsePath(std::string_view text);

enum class Polarity { kPositive, kNegative };

// Throws std::out_of_range for a path that leaves the tree.
Polarity PolarityAt(const AffineFormula& host, const Path& path);
const AffineFormula& SubformulaAt(const AffineFormula& host, const Path& path);
AffineFormula ReplaceAt(const AffineFormula& host, const Path& path,
                        const AffineFormula& replacement);
// All (path, subformula) pairs in preorder.
std::vector<std::pair<Path, AffineFormula>> Occurrences(
    const AffineFormula& host);

// The affine reading of an intuitionistic formula: E -o F becomes
// ~!b E' | F' and E ->> F becomes ~!p E' | F'.
AffineFormula Translate(const IntFormula& f);
// The recurrence used for antecedents of the given kind: !b or !p.
AffineFormula Recur(ImpKind kind, AffineFormula f);
AffineFormula CoRecur(ImpKind kind, AffineFormula f);

}  // namespace clint

#endif  // CLINT_FORMULA_HPP_
