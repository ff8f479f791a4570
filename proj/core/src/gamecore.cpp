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

#include "clint/gamecore.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <tuple>
#include <utility>

namespace clint {

namespace {

std::vector<std::string_view> SplitDots(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '.') {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void Bad(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad move '" + std::string(text) + "': " + why);
}

long ParseConstant(std::string_view text, std::string_view move) {
  if (text.empty() || text[0] < '1' || text[0] > '9') Bad(move, "constant must be a positive decimal");
  long v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    Bad(move, "constant must be a positive decimal");
  }
  return v;
}

std::size_t ParseIndex(std::string_view text, std::string_view move) {
  if (text.empty() || text[0] < '1' || text[0] > '9') Bad(move, "bad conjunct number");
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) Bad(move, "bad conjunct number");
  return v;
}

std::string Sub(std::size_t j) { return std::to_string(j); }

}  // namespace

const char* LabelName(Label label) { return label == Label::kTop ? "TOP" : "BOT"; }

Label ParseLabel(std::string_view text) {
  if (text == "TOP") return Label::kTop;
  if (text == "BOT") return Label::kBot;
  throw std::invalid_argument("bad label '" + std::string(text) + "'");
}

const char* MetatypeName(Metatype m) {
  switch (m) {
    case Metatype::kP: return "P";
    case Metatype::kQ: return "Q";
    case Metatype::kR: return "R";
    case Metatype::kX: return "X";
    case Metatype::kY: return "Y";
    case Metatype::kZ: return "Z";
    case Metatype::kW: return "W";
  }
  return "?";
}

bool IsPositive(Metatype m) {
  return m == Metatype::kW || m == Metatype::kX || m == Metatype::kY || m == Metatype::kQ;
}

std::string BitsString(const Bits& b) { return b.empty() ? "e" : b; }

Bits ParseBits(std::string_view text) {
  if (text == "e") return {};
  if (text.empty() || text.find_first_not_of("01") != std::string_view::npos) {
    throw std::invalid_argument("bad bitstring '" + std::string(text) + "'");
  }
  return Bits(text);
}

bool IsPrefix(const Bits& a, const Bits& b) {
  return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

bool BitsLess(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string Move::str() const {
  if (conjunct == 0) return "2." + std::to_string(constant);
  std::string out = "1." + std::to_string(conjunct) + "." + BitsString(w);
  if (kind == Kind::kReplicate) {
    if (inner) out += ".1.1." + BitsString(u);
    return out + ":";
  }
  switch (component) {
    case Metatype::kX: return out + ".1.1." + std::to_string(constant);
    case Metatype::kP: return out + ".1.1." + BitsString(u) + "." + std::to_string(constant);
    case Metatype::kY:
    case Metatype::kQ: return out + ".1.2." + std::to_string(constant);
    default: return out + ".2." + std::to_string(constant);
  }
}

Move ParseMove(std::string_view text, std::size_t s) {
  Move m;
  bool colon = !text.empty() && text.back() == ':';
  std::string_view body = colon ? text.substr(0, text.size() - 1) : text;
  std::vector<std::string_view> t = SplitDots(body);
  if (t[0] == "2") {
    if (colon || t.size() != 2) Bad(text, "consequent moves are 2.a");
    m.constant = ParseConstant(t[1], text);
    return m;
  }
  if (t[0] != "1" || t.size() < 3) Bad(text, "expected 1.i.w... or 2.a");
  m.conjunct = ParseIndex(t[1], text);
  if (m.conjunct > 2 * s) Bad(text, "no conjunct " + std::string(t[1]));
  bool second = m.conjunct > s;
  try {
    m.w = ParseBits(t[2]);
    if (colon) {
      m.kind = Move::Kind::kReplicate;
      if (t.size() == 3) return m;
      if (second && t.size() == 6 && t[3] == "1" && t[4] == "1") {
        m.inner = true;
        m.u = ParseBits(t[5]);
        return m;
      }
      Bad(text, "bad replication");
    }
    if (t.size() == 5 && t[3] == "2") {
      m.component = second ? Metatype::kR : Metatype::kZ;
      m.constant = ParseConstant(t[4], text);
      return m;
    }
    if (t.size() == 6 && t[3] == "1" && t[4] == "2") {
      m.component = second ? Metatype::kQ : Metatype::kY;
      m.constant = ParseConstant(t[5], text);
      return m;
    }
    if (!second && t.size() == 6 && t[3] == "1" && t[4] == "1") {
      m.component = Metatype::kX;
      m.constant = ParseConstant(t[5], text);
      return m;
    }
    if (second && t.size() == 7 && t[3] == "1" && t[4] == "1") {
      m.component = Metatype::kP;
      m.u = ParseBits(t[5]);
      m.constant = ParseConstant(t[6], text);
      return m;
    }
  } catch (const std::invalid_argument& e) {
    std::string why = e.what();
    if (why.rfind("bad move", 0) == 0) throw;
    Bad(text, why);
  }
  Bad(text, "no such address");
}

Run FlipLabels(const Run& run) {
  Run out = run;
  for (auto& lm : out) lm.label = Flip(lm.label);
  return out;
}

nlohmann::json RunToJson(const Run& run) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& lm : run) {
    out.push_back({{"label", LabelName(lm.label)}, {"move", lm.move.str()}, {"step", lm.step}});
  }
  return out;
}

Run RunFromJson(const nlohmann::json& j, std::size_t s) {
  Run out;
  for (const auto& e : j) {
    out.push_back({ParseLabel(e.at("label").get<std::string>()),
                   ParseMove(e.at("move").get<std::string>(), s),
                   e.value("step", std::size_t{0})});
  }
  return out;
}

std::string MoleculeId::str() const {
  if (metatype == Metatype::kW) return "[W]";
  std::string out = std::string("[") + MetatypeName(metatype) + Sub(j) + "]^" + BitsString(w);
  if (metatype == Metatype::kP) out += "_" + BitsString(u);
  return out;
}

bool operator<(const MoleculeId& a, const MoleculeId& b) {
  if (a.metatype != b.metatype) return a.metatype < b.metatype;
  if (a.j != b.j) return a.j < b.j;
  if (a.w != b.w) return BitsLess(a.w, b.w);
  return BitsLess(a.u, b.u);
}

std::string Token::str() const { return letter + "(" + std::to_string(constant) + ")"; }

bool operator<(const Token& a, const Token& b) {
  return std::tie(a.letter, a.constant) < std::tie(b.letter, b.constant);
}

IllegalRun::IllegalRun(const std::string& why, std::size_t index)
    : std::invalid_argument("labmove " + std::to_string(index) + ": " + why), index_(index) {}

ResidualState::ResidualState(GameForm form) : form_(std::move(form)) {
  trees_.resize(2 * s());
}

int ResidualState::SlotOf(Metatype m) {
  switch (m) {
    case Metatype::kX:
    case Metatype::kQ: return 0;
    case Metatype::kY:
    case Metatype::kR: return 1;
    default: return 2;
  }
}

std::size_t ResidualState::RowOf(std::size_t conjunct) const {
  return conjunct > s() ? conjunct - s() : conjunct;
}

const std::string& ResidualState::AtomOf(Metatype m, std::size_t j) const {
  const StandardSequent& q = form_.sequent;
  if (m == Metatype::kW) return q.w;
  const StandardRow& r = q.rows.at(j - 1);
  switch (m) {
    case Metatype::kX: return r.x;
    case Metatype::kY: return r.y;
    case Metatype::kZ: return r.z;
    case Metatype::kP: return r.p;
    case Metatype::kQ: return r.q;
    default: return r.r;
  }
}

std::optional<std::string> ResidualState::WhyIllegal(const LabMove& lm) const {
  const Move& m = lm.move;
  if (m.conjunct == 0) {
    if (lm.label != Label::kTop) return "only TOP chooses in the consequent";
    if (w_) return "consequent already chosen";
    if (m.constant < 1) return "constant must be positive";
    return std::nullopt;
  }
  if (m.conjunct > trees_.size()) return "no conjunct " + std::to_string(m.conjunct);
  const Tree& t = trees_[m.conjunct - 1];
  bool second = m.conjunct > s();
  if (m.kind == Move::Kind::kReplicate) {
    if (lm.label != Label::kTop) return "only TOP replicates";
    auto leaf = t.leaves.find(m.w);
    if (leaf == t.leaves.end()) return BitsString(m.w) + " is not a leaf";
    if (!m.inner) return std::nullopt;
    if (!second) return "no inner tree in conjunct " + std::to_string(m.conjunct);
    if (!leaf->second.p.count(m.u)) return BitsString(m.u) + " is not an inner leaf";
    return std::nullopt;
  }
  Metatype c = m.component;
  bool family_ok = second ? (c == Metatype::kP || c == Metatype::kQ || c == Metatype::kR)
                          : (c == Metatype::kX || c == Metatype::kY || c == Metatype::kZ);
  if (!family_ok) return std::string("no ") + MetatypeName(c) + " in conjunct " + std::to_string(m.conjunct);
  if (lm.label != Owner(c)) {
    return std::string(MetatypeName(c)) + " is chosen by " + LabelName(Owner(c));
  }
  if (m.constant < 1) return "constant must be positive";
  if (!t.nodes.count(m.w)) return BitsString(m.w) + " is not a node";
  for (auto it = t.leaves.lower_bound(m.w); it != t.leaves.end() && IsPrefix(m.w, it->first); ++it) {
    const Leaf& leaf = it->second;
    if (c != Metatype::kP) {
      if (leaf.slot[SlotOf(c)]) return "already chosen at leaf " + BitsString(it->first);
      continue;
    }
    if (!leaf.inner.count(m.u)) {
      return BitsString(m.u) + " is not an inner node at leaf " + BitsString(it->first);
    }
    for (auto p = leaf.p.lower_bound(m.u); p != leaf.p.end() && IsPrefix(m.u, p->first); ++p) {
      if (p->second) return "already chosen at inner leaf " + BitsString(p->first);
    }
  }
  return std::nullopt;
}

void ResidualState::Apply(const LabMove& lm) {
  if (auto why = WhyIllegal(lm)) throw std::invalid_argument(*why);
  const Move& m = lm.move;
  const std::size_t origin = length_++;
  auto devirg = [&](const MoleculeId& id) {
    return Devirginization{m.constant, length_, origin, id};
  };
  auto record = [&](const MoleculeId& id, std::vector<MoleculeId> premises) {
    Token t{form_.Letter(AtomOf(id.metatype, id.j)), m.constant};
    (IsPositive(id.metatype) ? positive_ : negative_).insert(t);
    supers_.push_back({id, t, length_, origin, std::move(premises)});
  };
  if (m.conjunct == 0) {
    MoleculeId id{Metatype::kW, 0, {}, {}};
    w_ = devirg(id);
    record(id, {});
    used_.insert(m.constant);
    return;
  }
  Tree& t = trees_[m.conjunct - 1];
  const std::size_t j = RowOf(m.conjunct);
  if (m.kind == Move::Kind::kReplicate) {
    Leaf& leaf = t.leaves.at(m.w);
    if (m.inner) {
      auto p = leaf.p.extract(m.u);
      for (char b : {'0', '1'}) {
        leaf.inner.insert(m.u + b);
        leaf.p.emplace(m.u + b, p.mapped());
      }
      return;
    }
    Leaf copy = leaf;
    t.leaves.erase(m.w);
    for (char b : {'0', '1'}) {
      t.nodes.insert(m.w + b);
      t.leaves.emplace(m.w + b, copy);
    }
    return;
  }
  used_.insert(m.constant);
  const Metatype c = m.component;
  for (auto it = t.leaves.lower_bound(m.w); it != t.leaves.end() && IsPrefix(m.w, it->first); ++it) {
    Leaf& leaf = it->second;
    if (c == Metatype::kP) {
      for (auto p = leaf.p.lower_bound(m.u); p != leaf.p.end() && IsPrefix(m.u, p->first); ++p) {
        MoleculeId id{c, j, it->first, p->first};
        p->second = devirg(id);
        record(id, {});
      }
      continue;
    }
    MoleculeId id{c, j, it->first, {}};
    std::vector<MoleculeId> premises;
    if (c == Metatype::kZ) {
      for (int k : {0, 1}) {
        if (leaf.slot[k]) premises.push_back(leaf.slot[k]->essence);
      }
    } else if (c == Metatype::kR && leaf.slot[0]) {
      premises.push_back(leaf.slot[0]->essence);
    }
    leaf.slot[SlotOf(c)] = devirg(id);
    record(id, std::move(premises));
  }
}

std::vector<Molecule> ResidualState::Molecules() const {
  std::vector<Molecule> out;
  const std::size_t n = s();
  auto sorted_leaves = [](const Tree& t) {
    std::vector<const std::pair<const Bits, Leaf>*> v;
    for (const auto& e : t.leaves) v.push_back(&e);
    std::sort(v.begin(), v.end(), [](auto* a, auto* b) { return BitsLess(a->first, b->first); });
    return v;
  };
  auto add = [&](Metatype c, std::size_t conjunct) {
    const std::size_t j = RowOf(conjunct);
    for (auto* e : sorted_leaves(trees_[conjunct - 1])) {
      if (c != Metatype::kP) {
        out.push_back({{c, j, e->first, {}}, AtomOf(c, j), e->second.slot[SlotOf(c)]});
        continue;
      }
      std::vector<Bits> us;
      for (const auto& p : e->second.p) us.push_back(p.first);
      std::sort(us.begin(), us.end(), BitsLess);
      for (const auto& u : us) {
        out.push_back({{c, j, e->first, u}, AtomOf(c, j), e->second.p.at(u)});
      }
    }
  };
  for (Metatype c : {Metatype::kP, Metatype::kQ, Metatype::kR}) {
    for (std::size_t j = 1; j <= n; ++j) add(c, n + j);
  }
  for (Metatype c : {Metatype::kX, Metatype::kY, Metatype::kZ}) {
    for (std::size_t j = 1; j <= n; ++j) add(c, j);
  }
  out.push_back({{Metatype::kW, 0, {}, {}}, form_.sequent.w, w_});
  return out;
}

std::optional<Molecule> ResidualState::Find(const MoleculeId& id) const {
  if (id.metatype == Metatype::kW) return Molecule{id, form_.sequent.w, w_};
  if (id.j < 1 || id.j > s()) return std::nullopt;
  bool second = id.metatype == Metatype::kP || id.metatype == Metatype::kQ ||
                id.metatype == Metatype::kR;
  const Tree& t = trees_[(second ? s() : 0) + id.j - 1];
  auto leaf = t.leaves.find(id.w);
  if (leaf == t.leaves.end()) return std::nullopt;
  const std::string& atom = AtomOf(id.metatype, id.j);
  if (id.metatype != Metatype::kP) return Molecule{id, atom, leaf->second.slot[SlotOf(id.metatype)]};
  auto p = leaf->second.p.find(id.u);
  if (p == leaf->second.p.end()) return std::nullopt;
  return Molecule{id, atom, p->second};
}

const std::set<Bits>& ResidualState::OuterTree(std::size_t conjunct) const {
  return trees_.at(conjunct - 1).nodes;
}

std::set<Bits> ResidualState::InnerTree(std::size_t conjunct, const Bits& w) const {
  if (conjunct <= s()) return {};
  const Tree& t = trees_.at(conjunct - 1);
  auto leaf = t.leaves.find(w);
  if (leaf == t.leaves.end()) return {};
  return leaf->second.inner;
}

const std::string& ResidualState::Letter(const Molecule& m) const { return form_.Letter(m.atom); }

std::optional<Token> ResidualState::ContentToken(const Molecule& m) const {
  if (!m.state) return std::nullopt;
  return Token{Letter(m), m.state->constant};
}

std::string ResidualState::Content(const Molecule& m) const {
  if (!m.state) return "Ux " + Letter(m) + "(x)";
  return ContentToken(m)->str();
}

bool Legal(const ResidualState& state, const LabMove& lm) { return !state.WhyIllegal(lm); }

ResidualState Project(const Run& run, const GameForm& form) {
  return Fold(ResidualState(form), run);
}

ResidualState Fold(ResidualState state, const Run& more) {
  for (const auto& lm : more) {
    if (auto why = state.WhyIllegal(lm)) throw IllegalRun(*why, state.length());
    state.Apply(lm);
  }
  return state;
}

bool MatchinglyDevirginized(const ResidualState& state, const MoleculeId& id) {
  auto m = state.Find(id);
  if (!m || !m->state) return false;
  return state.HasContent(!m->positive(), *state.ContentToken(*m));
}

long FreshChoiceConstant(const ResidualState& state) {
  long a = 1;
  for (long u : state.used_constants()) {
    if (u > a) break;
    if (u == a) ++a;
  }
  return a;
}

std::vector<std::string> LegalMoveTemplates(const ResidualState& state, Label label) {
  std::vector<std::string> out;
  const std::size_t s = state.s();
  auto try_add = [&](Move m) {
    Move probe = m;
    if (probe.kind == Move::Kind::kChoice) probe.constant = 1;
    if (!Legal(state, {label, probe, 0})) return;
    std::string text = probe.str();
    if (m.kind == Move::Kind::kChoice) text = text.substr(0, text.size() - 1) + "{a}";
    out.push_back(text);
  };
  try_add(Move{});
  for (std::size_t i = 1; i <= 2 * s; ++i) {
    bool second = i > s;
    for (const Bits& w : state.OuterTree(i)) {
      Move m;
      m.conjunct = i;
      m.w = w;
      for (Metatype c : second ? std::vector{Metatype::kQ, Metatype::kR}
                               : std::vector{Metatype::kX, Metatype::kY, Metatype::kZ}) {
        m.kind = Move::Kind::kChoice;
        m.component = c;
        bool leaf = !state.OuterTree(i).count(w + "0");
        if (leaf) try_add(m);
      }
      if (state.OuterTree(i).count(w + "0")) continue;
      m.kind = Move::Kind::kReplicate;
      try_add(m);
      if (!second) continue;
      for (const Bits& u : state.InnerTree(i, w)) {
        if (state.InnerTree(i, w).count(u + "0")) continue;
        Move p;
        p.conjunct = i;
        p.w = w;
        p.u = u;
        p.component = Metatype::kP;
        try_add(p);
        p.kind = Move::Kind::kReplicate;
        p.inner = true;
        try_add(p);
      }
    }
  }
  return out;
}

std::vector<Supermolecule> Ogsms(const ResidualState& state, std::size_t delta) {
  std::vector<Supermolecule> out;
  for (const auto& sm : state.supermolecules()) {
    if (sm.time <= delta) out.push_back(sm);
  }
  std::sort(out.begin(), out.end(),
            [](const Supermolecule& a, const Supermolecule& b) { return a.id < b.id; });
  return out;
}

namespace {

// Can b follow a at position k (1-based position of a) in a chain?
bool Follows(const Supermolecule& a, const Supermolecule& b, std::size_t k) {
  if (b.id.metatype == Metatype::kP) return false;
  if (k % 2 == 1) {
    // a negative, b positive with the same content.
    return IsPositive(b.id.metatype) && a.content == b.content;
  }
  // a positive at an even position, b negative at an odd one >= 3.
  if (IsPositive(b.id.metatype)) return false;
  return std::find(b.premises.begin(), b.premises.end(), a.id) != b.premises.end();
}

bool Closes(const Supermolecule& m, std::size_t j) {
  return m.id.metatype == Metatype::kQ && m.id.j == j;
}

}  // namespace

bool IsChain(const ResidualState& state, std::size_t delta,
             const std::vector<MoleculeId>& chain, std::string* why) {
  auto fail = [&](const std::string& text) {
    if (why) *why = text;
    return false;
  };
  if (chain.empty()) return fail("empty chain");
  std::vector<Supermolecule> og = Ogsms(state, delta);
  std::vector<const Supermolecule*> el;
  for (const auto& id : chain) {
    auto it = std::find_if(og.begin(), og.end(), [&](const Supermolecule& s) { return s.id == id; });
    if (it == og.end()) return fail(id.str() + " is not an OGSM");
    el.push_back(&*it);
  }
  if (el[0]->id.metatype != Metatype::kP) return fail("first element is not of metatype P");
  for (std::size_t k = 1; k < el.size(); ++k) {
    if (!Follows(*el[k - 1], *el[k], k)) {
      return fail(el[k]->id.str() + " cannot follow " + el[k - 1]->id.str());
    }
  }
  return true;
}

bool IsOpenChain(const ResidualState& state, std::size_t delta,
                 const std::vector<MoleculeId>& chain) {
  if (!IsChain(state, delta, chain)) return false;
  const std::size_t j = chain[0].j;
  return std::none_of(chain.begin(), chain.end(), [&](const MoleculeId& id) {
    return id.metatype == Metatype::kQ && id.j == j;
  });
}

std::optional<std::vector<MoleculeId>> FindMasterChain(const ResidualState& state,
                                                       std::size_t delta) {
  std::vector<Supermolecule> og = Ogsms(state, delta);
  // Layer k maps (element index, start row) to the least open prefix.
  using Key = std::pair<std::size_t, std::size_t>;
  std::map<Key, std::vector<MoleculeId>> layer;
  for (std::size_t e = 0; e < og.size(); ++e) {
    if (og[e].id.metatype == Metatype::kP) layer[{e, og[e].id.j}] = {og[e].id};
  }
  const std::size_t max_len = 2 * og.size() + 2;
  for (std::size_t k = 1; k <= max_len && !layer.empty(); ++k) {
    std::optional<std::vector<MoleculeId>> best;
    for (const auto& [key, prefix] : layer) {
      if (og[key.first].id.metatype != Metatype::kW) continue;
      if (!best || std::lexicographical_compare(prefix.begin(), prefix.end(), best->begin(),
                                                best->end())) {
        best = prefix;
      }
    }
    if (best) return best;
    std::map<Key, std::vector<MoleculeId>> next;
    for (const auto& [key, prefix] : layer) {
      const Supermolecule& a = og[key.first];
      if (a.id.metatype == Metatype::kW) continue;
      for (std::size_t e = 0; e < og.size(); ++e) {
        if (!Follows(a, og[e], k) || Closes(og[e], key.second)) continue;
        std::vector<MoleculeId> cand = prefix;
        cand.push_back(og[e].id);
        auto [it, fresh] = next.try_emplace({e, key.second}, cand);
        if (!fresh && std::lexicographical_compare(cand.begin(), cand.end(), it->second.begin(),
                                                   it->second.end())) {
          it->second = std::move(cand);
        }
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::set<std::string> Base(const ResidualState& state, std::size_t delta, const MoleculeId& m) {
  std::vector<Supermolecule> og = Ogsms(state, delta);
  std::set<std::string> out;
  for (std::size_t start = 0; start < og.size(); ++start) {
    if (og[start].id.metatype != Metatype::kP) continue;
    const std::size_t j = og[start].id.j;
    // Parity of the position is fixed by polarity, so element reachability
    // suffices.
    std::vector<bool> seen(og.size(), false);
    std::vector<std::size_t> todo{start};
    seen[start] = true;
    while (!todo.empty()) {
      std::size_t a = todo.back();
      todo.pop_back();
      if (og[a].id == m) {
        out.insert(state.form().sequent.rows.at(j - 1).p);
        break;
      }
      std::size_t pos = IsPositive(og[a].id.metatype) ? 2 : 1;
      for (std::size_t e = 0; e < og.size(); ++e) {
        if (seen[e] || !Follows(og[a], og[e], pos) || Closes(og[e], j)) continue;
        seen[e] = true;
        todo.push_back(e);
      }
    }
  }
  return out;
}

Label Eval(const ResidualState& state, const std::function<bool(const Token&)>& truth) {
  std::map<MoleculeId, bool> val;
  for (const auto& m : state.Molecules()) {
    val[m.id] = m.state && truth(*state.ContentToken(m));
  }
  auto at = [&](Metatype c, std::size_t j, const Bits& w) { return val.at({c, j, w, {}}); };
  const std::size_t s = state.s();
  bool antecedent = true;
  for (std::size_t j = 1; j <= s && antecedent; ++j) {
    for (const Bits& w : state.OuterTree(j)) {
      if (state.OuterTree(j).count(w + "0")) continue;
      if (at(Metatype::kX, j, w) && at(Metatype::kY, j, w) && !at(Metatype::kZ, j, w)) {
        antecedent = false;
        break;
      }
    }
  }
  for (std::size_t j = 1; j <= s && antecedent; ++j) {
    for (const Bits& w : state.OuterTree(s + j)) {
      if (state.OuterTree(s + j).count(w + "0")) continue;
      std::set<Bits> inner = state.InnerTree(s + j, w);
      bool all_p = std::all_of(inner.begin(), inner.end(), [&](const Bits& u) {
        return inner.count(u + "0") || val.at({Metatype::kP, j, w, u});
      });
      bool imp = !all_p || at(Metatype::kQ, j, w);
      if (imp && !at(Metatype::kR, j, w)) {
        antecedent = false;
        break;
      }
    }
  }
  bool w = val.at({Metatype::kW, 0, {}, {}});
  return (!antecedent || w) ? Label::kTop : Label::kBot;
}

nlohmann::json MoleculeToJson(const ResidualState& state, const Molecule& m) {
  nlohmann::json out{{"id", m.id.str()},
                     {"metatype", MetatypeName(m.id.metatype)},
                     {"j", m.id.j},
                     {"w", BitsString(m.id.w)},
                     {"atom", m.atom},
                     {"positive", m.positive()},
                     {"content", state.Content(m)}};
  if (m.id.metatype == Metatype::kP) out["u"] = BitsString(m.id.u);
  if (m.state) {
    out["constant"] = m.state->constant;
    out["time"] = m.state->time;
    out["essence"] = m.state->essence.str();
    out["matching"] = MatchinglyDevirginized(state, m.id);
  }
  return out;
}

nlohmann::json StateToJson(const ResidualState& state) {
  nlohmann::json trees = nlohmann::json::array();
  for (std::size_t i = 1; i <= 2 * state.s(); ++i) {
    std::vector<Bits> nodes(state.OuterTree(i).begin(), state.OuterTree(i).end());
    std::sort(nodes.begin(), nodes.end(), BitsLess);
    nlohmann::json t{{"conjunct", i}, {"nodes", nlohmann::json::array()}};
    for (const auto& w : nodes) t["nodes"].push_back(BitsString(w));
    if (i > state.s()) {
      nlohmann::json inner = nlohmann::json::object();
      for (const auto& w : nodes) {
        std::set<Bits> in = state.InnerTree(i, w);
        if (in.empty()) continue;
        std::vector<Bits> v(in.begin(), in.end());
        std::sort(v.begin(), v.end(), BitsLess);
        for (const auto& u : v) inner[BitsString(w)].push_back(BitsString(u));
      }
      t["inner"] = inner;
    }
    trees.push_back(t);
  }
  nlohmann::json ledger = nlohmann::json::array();
  for (const auto& m : state.Molecules()) ledger.push_back(MoleculeToJson(state, m));
  nlohmann::json supers = nlohmann::json::array();
  for (const auto& sm : state.supermolecules()) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& id : sm.premises) p.push_back(id.str());
    supers.push_back({{"id", sm.id.str()},
                      {"content", sm.content.str()},
                      {"time", sm.time},
                      {"premises", p}});
  }
  return {{"length", state.length()},
          {"trees", trees},
          {"molecules", ledger},
          {"supermolecules", supers}};
}

}  // namespace clint
