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

// JSON-over-HTTP sessions where a human plays TOP against E.
//
//   POST /prove                {formula, kind?}
//   POST /transform            {formula, kind?}
//   POST /simulate             {formula, kind?, adversary?, budget?, valuation?}
//   POST /sessions             {formula, kind?, budget?, name?}
//   GET  /sessions/:id
//   POST /sessions/:id/move    {move}      a null move passes
//   POST /sessions/:id/finish
//
// A session wraps an Engine: each accepted move (or pass) ends the pending
// step and E runs up to its next grant.  finish treats the human as done and
// runs to quiescence, so a scripted client gets the record Schedule would.

#ifndef CLINT_SERVICE_HPP_
#define CLINT_SERVICE_HPP_

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "clint/commands.hpp"

namespace clint {

struct Response {
  int status = 200;
  nlohmann::json body;
};

class Session {
 public:
  Session(std::string id, PlayForm form, std::size_t budget, std::string name);

  const std::string& id() const { return id_; }
  bool finished() const { return finished_; }
  // Moves of E made since the last call.
  nlohmann::json TakeEngineMoves();
  Response Move(const nlohmann::json& move);
  Response Finish();
  // Immutable; safe to read without the session lock.
  std::shared_ptr<const nlohmann::json> snapshot() const { return std::atomic_load(&snapshot_); }
  std::mutex& mutex() { return mu_; }
  const BranchRecord& record() const { return engine_.record(); }

 private:
  void Publish();
  // Runs E to its next grant; finishes the session when the budget is spent.
  void Advance();

  std::string id_;
  PlayForm form_;
  Engine engine_;
  std::size_t reported_ = 0;
  bool finished_ = false;
  nlohmann::json outcome_;
  std::shared_ptr<const nlohmann::json> snapshot_;
  std::mutex mu_;
};

class Service {
 public:
  // path excludes the query string.
  Response Handle(const std::string& method, const std::string& path, const std::string& body);

  Response Prove(const nlohmann::json& req);
  Response Transform(const nlohmann::json& req);
  Response Simulate(const nlohmann::json& req);
  Response CreateSession(const nlohmann::json& req);
  Response GetSession(const std::string& id);
  Response MoveSession(const std::string& id, const nlohmann::json& req);
  Response FinishSession(const std::string& id);

  std::shared_ptr<Session> Find(const std::string& id);

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_ = 1;
};

// Blocks serving svc on host:port until Stop.  Returns false when the
// address cannot be bound.
class HttpServer {
 public:
  explicit HttpServer(Service& svc);
  ~HttpServer();
  bool Listen(const std::string& host, int port);
  // Binds to an ephemeral port and returns it, or -1.
  int BindAny(const std::string& host);
  bool ListenAfterBind();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// "host:port" from CLINT_LISTEN, else 127.0.0.1:8080.
std::pair<std::string, int> DefaultListenAddress();

}  // namespace clint

#endif  // CLINT_SERVICE_HPP_
