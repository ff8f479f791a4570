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

#include <httplib.h>

#include "clint/service.hpp"

namespace clint {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Service& svc) : impl_(std::make_unique<Impl>()) {
  auto& srv = impl_->server;
  auto handle = [&svc](const httplib::Request& req, httplib::Response& res) {
    Response r = svc.Handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  srv.Get(R"(/sessions/[^/]+)", handle);
  srv.Post(R"(/prove|/transform|/simulate|/sessions|/sessions/[^/]+/(move|finish))", handle);
  // The bundled UI may be served from another port during development.
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Headers", "Content-Type"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  srv.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (res.body.empty()) {
      nlohmann::json body{{"error", "no such endpoint"}, {"reason", req.method + " " + req.path}};
      res.set_content(body.dump(), "application/json");
    }
  });
}

HttpServer::~HttpServer() = default;

bool HttpServer::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int HttpServer::BindAny(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

}  // namespace clint
