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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "clint/commands.hpp"
#include "clint/service.hpp"

namespace clint {

namespace {

struct Options {
  std::string formula;
  std::string input;  // file
  std::string kind;
  std::size_t budget = kDefaultBudget;
  std::optional<std::size_t> bound;
  std::string registry;
  std::string adversary;
  long valuation = 1;
  std::string listen;
};

std::string Slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  return Slurp(f);
}

// Bad input of any kind, reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string FormulaText(const Options& o, std::istream& in) {
  if (!o.input.empty()) return ReadFile(o.input);
  if (o.formula == "-") return Slurp(in);
  if (o.formula.empty()) throw UsageError("a formula is required");
  return o.formula;
}

std::optional<ImpKind> Kind(const Options& o) {
  if (o.kind.empty()) return std::nullopt;
  return ParseImpKind(o.kind);
}

nlohmann::json JsonArg(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\n");
  if (start != std::string::npos && text[start] == '{') return nlohmann::json::parse(text);
  return nlohmann::json::parse(ReadFile(text));
}

Registry SuiteRegistry() {
  Registry reg;
  long c = 1;
  for (auto& [name, make] : AdversarySuite()) reg.Register(c++, make);
  return reg;
}

int Report(const nlohmann::json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
  return j.value("ok", false) ? kAffirmative : kNegative;
}

int Serve(const Options& o, std::ostream& out, std::ostream& err) {
  auto [host, port] = DefaultListenAddress();
  if (!o.listen.empty()) {
    std::size_t colon = o.listen.rfind(':');
    if (colon == std::string::npos) throw UsageError("--listen must be host:port");
    host = o.listen.substr(0, colon);
    port = std::stoi(o.listen.substr(colon + 1));
  }
  Service svc;
  HttpServer server(svc);
  out << "listening on " << host << ":" << port << std::endl;
  if (!server.Listen(host, port)) {
    err << "cannot listen on " << host << ":" << port << "\n";
    return kNegative;
  }
  return kAffirmative;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"clint: provers, countermodels and counterstrategies for implicational logic"};
  app.require_subcommand(1);
  Options o;

  auto formula_opts = [&](CLI::App* sub) {
    sub->add_option("formula", o.formula, "formula or sequent; - reads stdin");
    sub->add_option("--input", o.input, "read the formula from a file");
    sub->add_option("--kind", o.kind, "bimp or pimp; read off the arrows by default")
        ->check(CLI::IsMember({"bimp", "pimp"}));
  };
  CLI::App* prove = app.add_subcommand("prove", "decide provability; print a proof or a countermodel");
  formula_opts(prove);
  CLI::App* counter = app.add_subcommand("countermodel", "smallest Kripke countermodel");
  formula_opts(counter);
  counter->add_option("--bound", o.bound, "world bound; default the number of distinct subformulas")
      ->check(CLI::PositiveNumber);
  CLI::App* transform = app.add_subcommand("transform", "standardization, desequentization, game form");
  formula_opts(transform);
  CLI::App* simulate = app.add_subcommand("simulate", "play E against an adversary");
  formula_opts(simulate);
  simulate->add_option("--adversary", o.adversary, "adversary JSON, inline or a file; idle by default");
  simulate->add_option("--budget", o.budget, "step budget")->check(CLI::PositiveNumber);
  simulate->add_option("--valuation", o.valuation, "the constant c");
  CLI::App* star = app.add_subcommand("star-check", "dagger against star for every registered c");
  formula_opts(star);
  star->add_option("--registry", o.registry, "registry JSON file; the bundled suite by default");
  star->add_option("--budget", o.budget, "step budget")->check(CLI::PositiveNumber);
  CLI::App* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->add_option("--listen", o.listen, "host:port; CLINT_LISTEN or 127.0.0.1:8080 by default");

  std::vector<const char*> argv{"clint"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kUsage;
  }

  try {
    if (serve->parsed()) return Serve(o, out, err);
    std::string text = FormulaText(o, in);
    if (prove->parsed()) return Report(ProveReport(ParseInput(text, Kind(o))), out);
    if (counter->parsed()) {
      IntSequent s = ParseInput(text, Kind(o));
      std::size_t bound = o.bound.value_or(0);
      if (!o.bound) {
        std::set<std::string> subs;
        for (const auto& f : s.antecedent) {
          for (const auto& g : Subformulas(f)) subs.insert(g.str());
        }
        for (const auto& g : Subformulas(s.succedent)) subs.insert(g.str());
        bound = subs.size();
      }
      return Report(CountermodelReport(s, bound), out);
    }
    IntFormula k = ParseFormulaInput(text, Kind(o));
    if (transform->parsed()) return Report(TransformReport(k), out);
    if (simulate->parsed()) {
      AdversaryFactory adv = o.adversary.empty() ? AdversaryFactory(MakeIdle)
                                                 : AdversaryFromJson(JsonArg(o.adversary));
      try {
        return Report(SimulateReport(k, adv, Valuation{o.valuation}, o.budget), out);
      } catch (const std::invalid_argument& e) {
        if (IntProvable(IntSequent{{}, MakePlayForm(k).formula})) {
          err << e.what() << "\n";
          return kNegative;
        }
        throw;
      }
    }
    if (star->parsed()) {
      Registry reg = o.registry.empty() ? SuiteRegistry() : Registry::FromJson(JsonArg(o.registry));
      try {
        return Report(StarCheckReport(k, reg, o.budget), out);
      } catch (const std::invalid_argument& e) {
        if (IntProvable(IntSequent{{}, MakePlayForm(k).formula})) {
          err << e.what() << "\n";
          return kNegative;
        }
        throw;
      }
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace clint
