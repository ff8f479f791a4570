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

#include "clint/service.hpp"

#include <cstdlib>
#include <stdexcept>

#include "clint/calculus.hpp"
#include "clint/transform.hpp"

namespace clint {

namespace {

Response Error(int status, const std::string& error, const std::string& reason = "") {
  nlohmann::json body{{"error", error}};
  if (!reason.empty()) body["reason"] = reason;
  return {status, body};
}

std::optional<ImpKind> KindOf(const nlohmann::json& req) {
  if (!req.contains("kind") || req["kind"].is_null()) return std::nullopt;
  return ParseImpKind(req["kind"].get<std::string>());
}

IntFormula FormulaOf(const nlohmann::json& req) {
  return ParseFormulaInput(req.at("formula").get<std::string>(), KindOf(req));
}

std::size_t BudgetOf(const nlohmann::json& req) {
  if (!req.contains("budget")) return kDefaultBudget;
  long b = req["budget"].get<long>();
  if (b < 1) throw std::invalid_argument("budget must be at least 1");
  return static_cast<std::size_t>(b);
}

nlohmann::json MovesJson(const Run& run, std::size_t from) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = from; i < run.size(); ++i) {
    out.push_back({{"label", LabelName(run[i].label)},
                   {"move", run[i].move.str()},
                   {"step", run[i].step}});
  }
  return out;
}

}  // namespace

Session::Session(std::string id, PlayForm form, std::size_t budget, std::string name)
    : id_(std::move(id)),
      form_(std::move(form)),
      engine_(form_.form, Valuation{}, std::move(name), budget) {
  Advance();
  Publish();
}

void Session::Advance() {
  if (engine_.CanWork()) {
    engine_.Work();
    return;
  }
  finished_ = true;
  outcome_ = OutcomeReport(engine_.record());
}

nlohmann::json Session::TakeEngineMoves() {
  const Run& run = engine_.record().run;
  nlohmann::json out = nlohmann::json::array();
  for (; reported_ < run.size(); ++reported_) {
    if (run[reported_].label == Label::kBot) {
      out.push_back({{"move", run[reported_].move.str()}, {"step", run[reported_].step}});
    }
  }
  return out;
}

Response Session::Move(const nlohmann::json& move) {
  if (!move.is_null() && !move.is_string()) return Error(400, "move must be a string or null");
  std::optional<std::string> m;
  if (move.is_string()) {
    m = move.get<std::string>();
    if (auto why = engine_.WhyIllegal(*m)) return Error(409, "illegal move", *why);
  }
  engine_.Reply(m);
  Advance();
  Publish();
  nlohmann::json body{{"id", id_},
                      {"status", finished_ ? "FINISHED" : "AWAITING_HUMAN"},
                      {"phase", PhaseName(engine_.phase())},
                      {"step", engine_.step()},
                      {"engine_moves", TakeEngineMoves()}};
  if (finished_) body["outcome"] = outcome_;
  return {200, body};
}

Response Session::Finish() {
  for (;;) {
    if (engine_.granted()) engine_.Reply(std::nullopt);
    if (engine_.MayQuiesce()) {
      engine_.Quiesce();
      break;
    }
    if (!engine_.CanWork()) break;
    engine_.Work();
  }
  finished_ = true;
  outcome_ = OutcomeReport(engine_.record());
  Publish();
  nlohmann::json body = outcome_;
  body["id"] = id_;
  body["status"] = "FINISHED";
  body["engine_moves"] = TakeEngineMoves();
  body["record"] = BranchRecordToJson(engine_.record());
  return {200, body};
}

void Session::Publish() {
  const ResidualState& st = engine_.state();
  const BranchRecord& r = engine_.record();
  const std::size_t delta = r.delta.value_or(st.length());
  nlohmann::json ogsms = nlohmann::json::array();
  for (const auto& sm : Ogsms(st, delta)) ogsms.push_back(sm.id.str());
  nlohmann::json chain = nullptr;
  if (auto c = FindMasterChain(st, delta)) {
    chain = nlohmann::json::array();
    for (const auto& id : *c) chain.push_back(id.str());
  }
  nlohmann::json legal = nlohmann::json::array();
  if (!finished_) {
    for (auto& t : LegalMoveTemplates(st, Label::kTop)) legal.push_back(t);
  }
  nlohmann::json snap{{"id", id_},
                      {"formula", form_.formula.str()},
                      {"status", finished_ ? "FINISHED" : "AWAITING_HUMAN"},
                      {"phase", PhaseName(engine_.phase())},
                      {"step", engine_.step()},
                      {"budget", engine_.budget()},
                      {"game_form", GameFormToJson(form_.form)},
                      {"state", StateToJson(st)},
                      {"chains", {{"delta", delta}, {"ogsms", ogsms}, {"master_chain", chain}}},
                      {"legal_moves", legal},
                      {"history", MovesJson(r.run, 0)},
                      {"outcome", finished_ ? outcome_ : nlohmann::json()}};
  if (form_.reduced_from) snap["reduced_from"] = ImpKindName(*form_.reduced_from);
  std::atomic_store(&snapshot_,
                    std::shared_ptr<const nlohmann::json>(
                        std::make_shared<nlohmann::json>(std::move(snap))));
}

Response Service::Prove(const nlohmann::json& req) {
  IntSequent s = ParseInput(req.at("formula").get<std::string>(), KindOf(req));
  return {200, ProveReport(s)};
}

Response Service::Transform(const nlohmann::json& req) {
  return {200, TransformReport(FormulaOf(req))};
}

Response Service::Simulate(const nlohmann::json& req) {
  AdversaryFactory adv = req.contains("adversary") ? AdversaryFromJson(req["adversary"])
                                                   : AdversaryFactory(MakeIdle);
  Valuation v{req.value("valuation", 1L)};
  IntFormula k = FormulaOf(req);
  if (IntProvable(IntSequent{{}, MakePlayForm(k).formula})) {
    return Error(400, "formula is provable");
  }
  return {200, SimulateReport(k, adv, v, BudgetOf(req))};
}

Response Service::CreateSession(const nlohmann::json& req) {
  IntFormula k = FormulaOf(req);
  std::size_t budget = BudgetOf(req);
  PlayForm pf = MakePlayForm(k);
  SearchOutcome o = IntProve(IntSequent{{}, pf.formula});
  if (o.proved()) {
    nlohmann::json body{{"error", "formula is provable"}, {"proof", IntProofToJson(*o.proof)}};
    return {400, body};
  }
  std::shared_ptr<Session> s;
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::string id = "s" + std::to_string(next_++);
    s = std::make_shared<Session>(id, std::move(pf), budget, req.value("name", std::string("human")));
    sessions_[id] = s;
  }
  std::lock_guard<std::mutex> lock(s->mutex());
  return {200, {{"id", s->id()},
                {"status", s->finished() ? "FINISHED" : "AWAITING_HUMAN"},
                {"engine_moves", s->TakeEngineMoves()}}};
}

std::shared_ptr<Session> Service::Find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response Service::GetSession(const std::string& id) {
  auto s = Find(id);
  if (!s) return Error(404, "unknown session", id);
  return {200, *s->snapshot()};
}

Response Service::MoveSession(const std::string& id, const nlohmann::json& req) {
  auto s = Find(id);
  if (!s) return Error(404, "unknown session", id);
  if (!req.contains("move")) return Error(400, "missing move");
  std::lock_guard<std::mutex> lock(s->mutex());
  if (s->finished()) return Error(410, "session finished", id);
  return s->Move(req.at("move"));
}

Response Service::FinishSession(const std::string& id) {
  auto s = Find(id);
  if (!s) return Error(404, "unknown session", id);
  std::lock_guard<std::mutex> lock(s->mutex());
  if (s->finished()) return Error(410, "session finished", id);
  return s->Finish();
}

Response Service::Handle(const std::string& method, const std::string& path,
                         const std::string& body) {
  nlohmann::json req = nlohmann::json::object();
  try {
    if (!body.empty()) req = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    return Error(400, "malformed JSON", e.what());
  }
  try {
    if (method == "POST" && path == "/prove") return Prove(req);
    if (method == "POST" && path == "/transform") return Transform(req);
    if (method == "POST" && path == "/simulate") return Simulate(req);
    if (method == "POST" && path == "/sessions") return CreateSession(req);
    const std::string prefix = "/sessions/";
    if (path.rfind(prefix, 0) == 0) {
      std::string rest = path.substr(prefix.size());
      std::size_t slash = rest.find('/');
      std::string id = rest.substr(0, slash);
      std::string action = slash == std::string::npos ? "" : rest.substr(slash + 1);
      if (method == "GET" && action.empty()) return GetSession(id);
      if (method == "POST" && action == "move") return MoveSession(id, req);
      if (method == "POST" && action == "finish") return FinishSession(id);
    }
    return Error(404, "no such endpoint", method + " " + path);
  } catch (const ParseError& e) {
    return Error(400, "parse error", e.what());
  } catch (const nlohmann::json::exception& e) {
    return Error(400, "bad request", e.what());
  } catch (const std::invalid_argument& e) {
    return Error(400, "bad request", e.what());
  }
}

std::pair<std::string, int> DefaultListenAddress() {
  std::string addr = "127.0.0.1:8080";
  if (const char* env = std::getenv("CLINT_LISTEN")) addr = env;
  std::size_t colon = addr.rfind(':');
  if (colon == std::string::npos) throw std::invalid_argument("CLINT_LISTEN must be host:port");
  return {addr.substr(0, colon), std::stoi(addr.substr(colon + 1))};
}

}  // namespace clint
