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

#include "clint/machines.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <stdexcept>

namespace clint {

namespace {

std::vector<std::pair<Label, std::string>> Texts(const Run& run) {
  std::vector<std::pair<Label, std::string>> out;
  out.reserve(run.size());
  for (const auto& lm : run) out.emplace_back(lm.label, lm.move.str());
  return out;
}

std::vector<std::pair<Label, std::string>> Texts(const std::vector<CopyMove>& run) {
  std::vector<std::pair<Label, std::string>> out;
  out.reserve(run.size());
  for (const auto& m : run) out.emplace_back(m.label, m.move);
  return out;
}

long LastConstant(const std::string& move) {
  auto dot = move.rfind('.');
  if (move.empty() || move.back() == ':' || dot == std::string::npos) {
    throw std::invalid_argument("move '" + move + "' carries no constant");
  }
  long v = 0;
  auto [p, ec] = std::from_chars(move.data() + dot + 1, move.data() + move.size(), v);
  if (ec != std::errc() || p != move.data() + move.size()) {
    throw std::invalid_argument("move '" + move + "' carries no constant");
  }
  return v;
}

Move MoveAt(const MoleculeId& id, std::size_t s, long constant) {
  Move m;
  m.constant = constant;
  m.component = id.metatype;
  if (id.metatype == Metatype::kW) return m;
  bool second = id.metatype == Metatype::kP || id.metatype == Metatype::kQ ||
                id.metatype == Metatype::kR;
  m.conjunct = (second ? s : 0) + id.j;
  m.w = id.w;
  m.u = id.u;
  return m;
}

class Idle : public Adversary {
 public:
  std::string name() const override { return "idle"; }
  std::optional<std::string> Step(const Observation&) override { return std::nullopt; }
  bool Exhausted(const Observation&) const override { return true; }
};

std::vector<std::string> TemplatesFor(const Observation& obs) {
  if (obs.form) return LegalMoveTemplates(*obs.form, Label::kTop);
  if (obs.copycat) {
    return obs.copycat->LegalMoveTemplates(Label::kBot, obs.copycat->Leaves().size() + 1);
  }
  return {};
}

const std::set<long>& UsedFor(const Observation& obs) {
  static const std::set<long> none;
  if (obs.form) return obs.form->used_constants();
  if (obs.copycat) return obs.copycat->used_constants();
  return none;
}

class RandomLegal : public Adversary {
 public:
  RandomLegal(std::uint64_t seed, std::size_t max_moves)
      : seed_(seed), rng_(seed), max_(max_moves) {}
  std::string name() const override { return "random-" + std::to_string(seed_); }

  std::optional<std::string> Step(const Observation& obs) override {
    if (made_ >= max_) return std::nullopt;
    if (rng_() % 4 == 0) return std::nullopt;
    auto t = TemplatesFor(obs);
    if (t.empty()) return std::nullopt;
    std::string text = t[rng_() % t.size()];
    if (auto p = text.find("{a}"); p != std::string::npos) {
      const auto& used = UsedFor(obs);
      std::vector<long> pool(used.begin(), used.end());
      long fresh = 1;
      while (used.count(fresh)) ++fresh;
      pool.push_back(fresh);
      text.replace(p, 3, std::to_string(pool[rng_() % pool.size()]));
    }
    ++made_;
    return text;
  }

  bool Exhausted(const Observation& obs) const override {
    return made_ >= max_ || TemplatesFor(obs).empty();
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::size_t max_;
  std::size_t made_ = 0;
};

class Matcher : public Adversary {
 public:
  Matcher(bool w_first, std::size_t max_moves) : w_first_(w_first), max_(max_moves) {}
  std::string name() const override { return w_first_ ? "w-matcher" : "greedy-matcher"; }

  std::optional<std::string> Step(const Observation& obs) override {
    if (made_ >= max_) return std::nullopt;
    auto m = Next(obs);
    if (m) ++made_;
    return m;
  }

  bool Exhausted(const Observation& obs) const override {
    return made_ >= max_ || !Next(obs);
  }

 private:
  std::optional<std::string> Next(const Observation& obs) const {
    if (!obs.form) return std::nullopt;
    const ResidualState& st = *obs.form;
    std::vector<Molecule> ms = st.Molecules();
    std::map<std::string, long> negative;  // atom -> first constant
    for (const auto& m : ms) {
      if (!m.positive() && m.state) negative.try_emplace(m.atom, m.state->constant);
    }
    auto try_at = [&](const Molecule& m) -> std::optional<std::string> {
      if (!m.positive() || m.state) return std::nullopt;
      auto it = negative.find(m.atom);
      if (it == negative.end()) return std::nullopt;
      return MoveAt(m.id, st.s(), it->second).str();
    };
    if (w_first_) {
      if (auto w = try_at(ms.back())) return w;
    }
    for (const auto& m : ms) {
      if (auto t = try_at(m)) return t;
    }
    return std::nullopt;
  }

  bool w_first_;
  std::size_t max_;
  std::size_t made_ = 0;
};

class Scripted : public Adversary {
 public:
  Scripted(std::string name, std::vector<ScriptEntry> script)
      : name_(std::move(name)), script_(std::move(script)) {}
  std::string name() const override { return name_; }

  std::optional<std::string> Step(const Observation& obs) override {
    if (next_ >= script_.size() || obs.permissions < script_[next_].trigger) return std::nullopt;
    return Fill(script_[next_++].move, obs);
  }

  bool Exhausted(const Observation&) const override { return next_ >= script_.size(); }

 private:
  static std::string Fill(const std::string& tmpl, const Observation& obs) {
    std::string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
      if (tmpl[i] != '{') {
        out += tmpl[i];
        continue;
      }
      auto close = tmpl.find('}', i);
      if (close == std::string::npos) throw std::invalid_argument("unclosed '{' in " + tmpl);
      long idx = std::stol(tmpl.substr(i + 1, close - i - 1));
      long n = static_cast<long>(obs.moves.size());
      long at = idx < 0 ? n + idx : idx;
      if (at < 0 || at >= n) {
        throw std::invalid_argument("template " + tmpl + " refers to move " + std::to_string(idx) +
                                    " of " + std::to_string(n));
      }
      out += std::to_string(LastConstant(obs.moves[static_cast<std::size_t>(at)].second));
      i = close;
    }
    return out;
  }

  std::string name_;
  std::vector<ScriptEntry> script_;
  std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<Adversary> MakeIdle() { return std::make_unique<Idle>(); }

std::unique_ptr<Adversary> MakeRandomLegal(std::uint64_t seed, std::size_t max_moves) {
  return std::make_unique<RandomLegal>(seed, max_moves);
}

std::unique_ptr<Adversary> MakeGreedyMatcher(std::size_t max_moves) {
  return std::make_unique<Matcher>(false, max_moves);
}

std::unique_ptr<Adversary> MakeWMatcher(std::size_t max_moves) {
  return std::make_unique<Matcher>(true, max_moves);
}

std::unique_ptr<Adversary> MakeScripted(std::string name, std::vector<ScriptEntry> script) {
  return std::make_unique<Scripted>(std::move(name), std::move(script));
}

AdversaryFactory AdversaryFromJson(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "idle") return [] { return MakeIdle(); };
  if (kind == "random") {
    auto seed = j.value("seed", std::uint64_t{1});
    auto moves = j.value("moves", std::size_t{8});
    return [seed, moves] { return MakeRandomLegal(seed, moves); };
  }
  if (kind == "greedy") {
    auto moves = j.value("moves", std::size_t{64});
    return [moves] { return MakeGreedyMatcher(moves); };
  }
  if (kind == "w-matcher") {
    auto moves = j.value("moves", std::size_t{64});
    return [moves] { return MakeWMatcher(moves); };
  }
  if (kind == "script") {
    std::vector<ScriptEntry> script;
    for (const auto& e : j.at("script")) {
      script.push_back({e.at("trigger").get<std::size_t>(), e.at("move").get<std::string>()});
    }
    std::string name = j.value("name", std::string("script"));
    return [name, script] { return MakeScripted(name, script); };
  }
  throw std::invalid_argument("unknown adversary kind '" + kind + "'");
}

void Registry::Register(long c, AdversaryFactory factory) {
  if (!entries_.emplace(c, std::move(factory)).second) {
    throw std::invalid_argument("constant " + std::to_string(c) + " is already registered");
  }
}

std::unique_ptr<Adversary> Registry::Lookup(long c) const {
  auto it = entries_.find(c);
  return it == entries_.end() ? MakeIdle() : it->second();
}

std::vector<long> Registry::Keys() const {
  std::vector<long> out;
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

Registry Registry::FromJson(const nlohmann::json& j) {
  Registry r;
  for (const auto& e : j.at("entries")) {
    r.Register(e.at("c").get<long>(), AdversaryFromJson(e.at("adversary")));
  }
  return r;
}

std::vector<std::pair<std::string, AdversaryFactory>> AdversarySuite() {
  std::vector<std::pair<std::string, AdversaryFactory>> out;
  out.emplace_back("idle", [] { return MakeIdle(); });
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    out.emplace_back("random-" + std::to_string(seed), [seed] { return MakeRandomLegal(seed); });
  }
  out.emplace_back("greedy-matcher", [] { return MakeGreedyMatcher(); });
  out.emplace_back("w-matcher", [] { return MakeWMatcher(); });
  return out;
}

const char* PhaseName(Phase p) {
  switch (p) {
    case Phase::kFirst: return "FIRST";
    case Phase::kSecond: return "SECOND";
    case Phase::kThird: return "THIRD";
  }
  return "?";
}

Engine::Engine(const GameForm& form, Valuation valuation, std::string adversary,
               std::size_t budget)
    : record_(form), state_(form), budget_(budget) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  record_.valuation = valuation;
  record_.adversary = std::move(adversary);
  record_.phases.emplace_back(phase_, 0);
}

void Engine::Emit(const MoleculeId& id) {
  Move m = MoveAt(id, state_.s(), FreshChoiceConstant(state_));
  LabMove lm{Label::kBot, m, step_};
  state_.Apply(lm);
  record_.run.push_back(lm);
  record_.epm_view.push_back({Label::kTop, m, step_});
  ++emitted_;
}

std::vector<MoleculeId> Engine::Virgin(bool rz) const {
  std::vector<MoleculeId> out;
  for (const auto& m : state_.Molecules()) {
    bool want = rz ? m.id.metatype == Metatype::kR || m.id.metatype == Metatype::kZ
                   : m.id.metatype == Metatype::kP;
    if (!m.state && want) out.push_back(m.id);
  }
  return out;
}

std::size_t Engine::Work() {
  if (!CanWork()) throw std::logic_error("engine cannot work now");
  auto matched = [&](Metatype c, std::size_t j, const Bits& w) {
    return MatchinglyDevirginized(state_, {c, j, w, {}});
  };
  at_start_ = phase_;
  emitted_ = 0;
  if (phase_ == Phase::kFirst) {
    for (const auto& id : Virgin(false)) Emit(id);
    phase_ = Phase::kSecond;
    record_.phases.emplace_back(phase_, step_ + 1);
  } else if (phase_ == Phase::kSecond &&
             MatchinglyDevirginized(state_, {Metatype::kW, 0, {}, {}})) {
    phase_ = Phase::kThird;
    record_.phases.emplace_back(phase_, step_);
    record_.delta = state_.length();
    for (const auto& id : Virgin(true)) Emit(id);
  } else if (phase_ == Phase::kSecond) {
    // Routine: answer every matched antecedent until nothing changes.
    for (;;) {
      std::vector<MoleculeId> todo;
      for (const auto& id : Virgin(true)) {
        bool go = id.metatype == Metatype::kZ
                      ? matched(Metatype::kX, id.j, id.w) && matched(Metatype::kY, id.j, id.w)
                      : matched(Metatype::kQ, id.j, id.w);
        if (go) todo.push_back(id);
      }
      if (todo.empty()) break;
      for (const auto& id : todo) Emit(id);
    }
  }
  record_.permission_steps.push_back(step_);
  granted_ = true;
  return emitted_;
}

Observation Engine::Observe() const {
  return {Texts(record_.run), record_.permission_steps.size(), &state_, nullptr};
}

std::optional<std::string> Engine::WhyIllegal(const std::string& move) const {
  try {
    return state_.WhyIllegal({Label::kTop, ParseMove(move, state_.s()), step_});
  } catch (const std::invalid_argument& e) {
    return std::string(e.what());
  }
}

bool Engine::Reply(const std::optional<std::string>& move) {
  if (!granted_) throw std::logic_error("no permission is pending");
  granted_ = false;
  record_.steps = ++step_;
  last_passed_ = !move;
  if (!move) return true;
  if (auto why = WhyIllegal(*move)) {
    Fail(*move + ": " + *why);
    return false;
  }
  LabMove lm{Label::kTop, ParseMove(*move, state_.s()), step_ - 1};
  state_.Apply(lm);
  record_.run.push_back(lm);
  record_.epm_view.push_back({Label::kBot, lm.move, lm.step});
  return true;
}

void Engine::Fail(const std::string& reason) {
  if (granted_) record_.steps = ++step_;
  granted_ = false;
  record_.adversary_illegal = true;
  record_.illegal_reason = reason;
}

bool Engine::MayQuiesce() const {
  return !granted_ && last_passed_ && at_start_ != Phase::kFirst && emitted_ == 0 &&
         !record_.adversary_illegal;
}

void Engine::Quiesce() {
  if (!MayQuiesce()) throw std::logic_error("engine is not at a fixpoint");
  record_.quiescent = true;
}

bool Engine::CanWork() const {
  return !granted_ && !record_.quiescent && !record_.adversary_illegal && step_ < budget_;
}

BranchRecord Schedule(Adversary& adversary, const GameForm& form, Valuation valuation,
                      std::size_t budget) {
  Engine e(form, valuation, adversary.name(), budget);
  while (e.CanWork()) {
    e.Work();
    std::optional<std::string> reply;
    try {
      reply = adversary.Step(e.Observe());
    } catch (const std::invalid_argument& ex) {
      e.Fail(ex.what());
      break;
    }
    if (!e.Reply(reply)) break;
    if (e.MayQuiesce() && adversary.Exhausted(e.Observe())) e.Quiesce();
  }
  return e.record();
}

nlohmann::json BranchRecordToJson(const BranchRecord& r) {
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& [p, step] : r.phases) phases.push_back({{"phase", PhaseName(p)}, {"step", step}});
  nlohmann::json out{{"form", GameFormToJson(r.form)},
                     {"valuation", {{"z", r.valuation.z}}},
                     {"adversary", r.adversary},
                     {"run", RunToJson(r.run)},
                     {"permissions", r.permission_steps},
                     {"phases", phases},
                     {"delta", r.delta ? nlohmann::json(*r.delta) : nlohmann::json()},
                     {"length", r.is_long() ? "LONG" : "SHORT"},
                     {"steps", r.steps},
                     {"quiescent", r.quiescent},
                     {"flags", nlohmann::json::array()}};
  if (r.adversary_illegal) {
    out["flags"].push_back("ADVERSARY_ILLEGAL");
    out["illegal_reason"] = r.illegal_reason;
  }
  return out;
}

// --- copycat -------------------------------------------------------------

namespace {

struct CopyParsed {
  enum class Kind { kReplicate, kLeaf, kConjunct } kind;
  Bits w;
  std::size_t k = 0;
  long a = 0;
};

CopyParsed ParseCopyMove(const std::string& move) {
  auto bad = [&](const char* why) {
    return std::invalid_argument("bad move '" + move + "': " + why);
  };
  if (move.rfind("1.", 0) == 0) {
    std::string rest = move.substr(2);
    if (!rest.empty() && rest.back() == ':') {
      return {CopyParsed::Kind::kReplicate, ParseBits(rest.substr(0, rest.size() - 1)), 0, 0};
    }
    auto dot = rest.find('.');
    if (dot == std::string::npos) throw bad("expected 1.w: or 1.v.a");
    long a = LastConstant(move);
    if (a < 1 || rest.substr(dot + 1) != std::to_string(a)) throw bad("bad constant");
    return {CopyParsed::Kind::kLeaf, ParseBits(rest.substr(0, dot)), 0, a};
  }
  if (move.rfind("2.", 0) == 0) {
    std::string rest = move.substr(2);
    auto dot = rest.find('.');
    if (dot == std::string::npos) throw bad("expected 2.k.a");
    std::size_t k = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + dot, k);
    if (ec != std::errc() || p != rest.data() + dot || k < 1 || rest[0] == '0') {
      throw bad("bad conjunct");
    }
    long a = LastConstant(move);
    if (a < 1 || rest.substr(dot + 1) != std::to_string(a)) throw bad("bad constant");
    return {CopyParsed::Kind::kConjunct, {}, k, a};
  }
  throw bad("expected 1.. or 2..");
}

}  // namespace

std::optional<std::string> CopycatState::WhyIllegal(Label label, const std::string& move) const {
  CopyParsed p;
  try {
    p = ParseCopyMove(move);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  switch (p.kind) {
    case CopyParsed::Kind::kReplicate:
      if (label != Label::kTop) return "only TOP replicates the antecedent";
      if (!nodes_.count(p.w) || nodes_.count(p.w + "0")) return BitsString(p.w) + " is not a leaf";
      return std::nullopt;
    case CopyParsed::Kind::kLeaf: {
      if (label != Flip(chooser_)) return std::string("antecedent choices are ") + LabelName(Flip(chooser_)) + "'s";
      if (!nodes_.count(p.w)) return BitsString(p.w) + " is not a node";
      for (auto it = leaf_choice_.lower_bound(p.w); it != leaf_choice_.end() && IsPrefix(p.w, it->first); ++it) {
        return "already chosen at leaf " + BitsString(it->first);
      }
      return std::nullopt;
    }
    case CopyParsed::Kind::kConjunct:
      if (label != chooser_) return std::string("consequent choices are ") + LabelName(chooser_) + "'s";
      if (conjuncts_.count(p.k)) return "conjunct " + std::to_string(p.k) + " already chosen";
      return std::nullopt;
  }
  return "?";
}

void CopycatState::Apply(Label label, const std::string& move) {
  if (auto why = WhyIllegal(label, move)) throw std::invalid_argument(*why);
  CopyParsed p = ParseCopyMove(move);
  switch (p.kind) {
    case CopyParsed::Kind::kReplicate: {
      nodes_.insert(p.w + "0");
      nodes_.insert(p.w + "1");
      auto it = leaf_choice_.find(p.w);
      if (it != leaf_choice_.end()) {
        long a = it->second;
        leaf_choice_.erase(it);
        leaf_choice_[p.w + "0"] = a;
        leaf_choice_[p.w + "1"] = a;
      }
      return;
    }
    case CopyParsed::Kind::kLeaf:
      for (const auto& w : Leaves()) {
        if (IsPrefix(p.w, w)) leaf_choice_[w] = p.a;
      }
      used_.insert(p.a);
      return;
    case CopyParsed::Kind::kConjunct:
      conjuncts_[p.k] = p.a;
      used_.insert(p.a);
      return;
  }
}

std::vector<Bits> CopycatState::Leaves() const {
  std::vector<Bits> out;
  for (const auto& w : nodes_) {
    if (!nodes_.count(w + "0")) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), BitsLess);
  return out;
}

std::optional<long> CopycatState::LeafChoice(const Bits& w) const {
  auto it = leaf_choice_.find(w);
  if (it == leaf_choice_.end()) return std::nullopt;
  return it->second;
}

std::optional<long> CopycatState::ConjunctChoice(std::size_t k) const {
  auto it = conjuncts_.find(k);
  if (it == conjuncts_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> CopycatState::LegalMoveTemplates(Label label, std::size_t limit) const {
  std::vector<std::string> out;
  std::vector<Bits> nodes(nodes_.begin(), nodes_.end());
  std::sort(nodes.begin(), nodes.end(), BitsLess);
  for (const auto& w : nodes) {
    std::string m = "1." + BitsString(w) + ":";
    if (!WhyIllegal(label, m)) out.push_back(m);
    std::string c = "1." + BitsString(w) + ".1";
    if (!WhyIllegal(label, c)) out.push_back("1." + BitsString(w) + ".{a}");
  }
  for (std::size_t k = 1; k <= limit; ++k) {
    std::string c = "2." + std::to_string(k) + ".1";
    if (!WhyIllegal(label, c)) out.push_back("2." + std::to_string(k) + ".{a}");
  }
  return out;
}

CopycatRecord ScheduleCopycat(Adversary& adversary, Label chooser, std::size_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  CopycatRecord r;
  r.chooser = chooser;
  CopycatState st(chooser);
  auto emit = [&](const std::string& move, std::size_t step) {
    st.Apply(Label::kTop, move);
    r.run.push_back({Label::kTop, move, step});
  };
  auto leaf_of = [](std::size_t j) { return std::string(j - 1, '0') + "1"; };

  for (std::size_t k = 1; k <= budget; ++k) {
    const std::size_t step = k - 1;
    const std::string w(k - 1, '0');
    emit("1." + BitsString(w) + ":", step);
    r.iterations = k;
    std::size_t copies = 0;
    // Catch up conjunct k with leaf w1.
    if (chooser == Label::kTop) {
      if (auto a = st.LeafChoice(w + "1"); a && !st.ConjunctChoice(k)) {
        emit("2." + std::to_string(k) + "." + std::to_string(*a), step);
        ++copies;
      }
    } else if (auto a = st.ConjunctChoice(k); a && !st.LeafChoice(w + "1")) {
      emit("1." + w + "1." + std::to_string(*a), step);
      ++copies;
    }

    r.permission_steps.push_back(step);
    Observation obs{Texts(r.run), r.permission_steps.size(), nullptr, &st};
    std::optional<std::string> reply;
    try {
      reply = adversary.Step(obs);
    } catch (const std::invalid_argument& e) {
      r.steps = k;
      r.adversary_illegal = true;
      r.illegal_reason = e.what();
      return r;
    }
    r.steps = k;
    if (reply) {
      if (auto why = st.WhyIllegal(Label::kBot, *reply)) {
        r.adversary_illegal = true;
        r.illegal_reason = *reply + ": " + *why;
        return r;
      }
      st.Apply(Label::kBot, *reply);
      r.run.push_back({Label::kBot, *reply, step});
      CopyParsed p = ParseCopyMove(*reply);
      if (p.kind == CopyParsed::Kind::kConjunct && p.k <= k) {
        emit("1." + leaf_of(p.k) + "." + std::to_string(p.a), step);
      } else if (p.kind == CopyParsed::Kind::kLeaf) {
        for (std::size_t j = 1; j <= k; ++j) {
          if (IsPrefix(p.w, leaf_of(j))) emit("2." + std::to_string(j) + "." + std::to_string(p.a), step);
        }
      }
      continue;
    }
    bool pending = !st.conjunct_choices().empty() && st.conjunct_choices().rbegin()->first > k;
    Observation after{Texts(r.run), r.permission_steps.size(), nullptr, &st};
    // A choice above the reserved leaf 0^k is copied into every later
    // conjunct the same way, which is a steady state too.
    bool steady = copies == 0 || st.LeafChoice(std::string(k, '0')).has_value();
    if (steady && !pending && adversary.Exhausted(after)) {
      r.quiescent = true;
      break;
    }
  }
  return r;
}

CopycatState ProjectCopycat(const CopycatRecord& r) {
  CopycatState st(r.chooser);
  for (const auto& m : r.run) st.Apply(m.label, m.move);
  return st;
}

std::optional<std::string> CheckDelayMatching(const CopycatRecord& r) {
  // Replay, remembering which labmove set each leaf and conjunct.
  CopycatState st(r.chooser);
  std::map<Bits, std::size_t> leaf_at;
  std::map<std::size_t, std::size_t> conj_at;
  for (std::size_t i = 0; i < r.run.size(); ++i) {
    const CopyMove& m = r.run[i];
    std::vector<Bits> before = st.Leaves();
    st.Apply(m.label, m.move);
    CopyParsed p = ParseCopyMove(m.move);
    if (p.kind == CopyParsed::Kind::kReplicate) {
      if (auto it = leaf_at.find(p.w); it != leaf_at.end()) {
        leaf_at[p.w + "0"] = it->second;
        leaf_at[p.w + "1"] = it->second;
        leaf_at.erase(it);
      }
    } else if (p.kind == CopyParsed::Kind::kLeaf) {
      for (const auto& w : before) {
        if (IsPrefix(p.w, w)) leaf_at[w] = i;
      }
    } else {
      conj_at[p.k] = i;
    }
  }
  for (std::size_t j = 1; j <= r.iterations; ++j) {
    Bits leaf = std::string(j - 1, '0') + "1";
    auto lc = st.LeafChoice(leaf);
    auto cc = st.ConjunctChoice(j);
    if (lc != cc) {
      return "conjunct " + std::to_string(j) + " and leaf " + leaf + " differ";
    }
    if (!lc) continue;
    std::size_t copy = std::max(leaf_at.at(leaf), conj_at.at(j));
    if (r.run[copy].label != Label::kTop) {
      return "conjunct " + std::to_string(j) + " copied before its original";
    }
  }
  return std::nullopt;
}

Label EvalCopycat(const CopycatRecord& r, const std::function<bool(long)>& truth) {
  CopycatState st = ProjectCopycat(r);
  auto g = [&](std::optional<long> a) {
    return r.chooser == Label::kTop ? (a && truth(*a)) : (!a || truth(*a));
  };
  bool antecedent = true;
  for (const auto& w : st.Leaves()) antecedent = antecedent && g(st.LeafChoice(w));
  bool consequent = g(st.LeafChoice(std::string(r.iterations, '0')));
  for (std::size_t j = 1; j <= r.iterations; ++j) consequent = consequent && g(st.ConjunctChoice(j));
  return (!antecedent || consequent) ? Label::kTop : Label::kBot;
}

nlohmann::json CopycatRecordToJson(const CopycatRecord& r) {
  nlohmann::json run = nlohmann::json::array();
  for (const auto& m : r.run) {
    run.push_back({{"label", LabelName(m.label)}, {"move", m.move}, {"step", m.step}});
  }
  nlohmann::json out{{"chooser", LabelName(r.chooser)},
                     {"run", run},
                     {"permissions", r.permission_steps},
                     {"iterations", r.iterations},
                     {"steps", r.steps},
                     {"quiescent", r.quiescent},
                     {"flags", nlohmann::json::array()}};
  if (r.adversary_illegal) {
    out["flags"].push_back("ADVERSARY_ILLEGAL");
    out["illegal_reason"] = r.illegal_reason;
  }
  return out;
}

}  // namespace clint
