// Copyright 2026 The catsheaf Authors
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

// catsheaf: command-line front end for workspace files.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 input or parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "catsheaf/dsl/commands.hpp"

namespace {

using catsheaf::dsl::Format;
using catsheaf::dsl::ReportRecord;
using catsheaf::dsl::Session;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
  std::size_t cap = catsheaf::kDefaultCap;
  std::string format = "text";
  std::string seed_order = "lex";
  std::string file;
  std::vector<std::string> args;
};

int emit(const std::vector<ReportRecord>& records, Format format) {
  bool ok = true;
  for (const auto& r : records) {
    std::cout << catsheaf::dsl::serialize_report(r, format);
    ok = ok && r.passed;
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite categories, Cat-valued presheaves and sieves"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap", opt.cap, "Candidate cap for every enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed-order", opt.seed_order, "Enumeration order (fixed)")
      ->check(CLI::IsMember({"lex"}));

  struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> params;
    std::function<std::vector<ReportRecord>(Session&, const std::vector<std::string>&)> run;
  };
  const std::vector<Command> commands = {
      {"validate", "Parse and resolve a workspace", {}, nullptr},
      {"run", "Run every requested check", {},
       [](Session& s, const auto&) { return s.run_all(); }},
      {"enum-fun", "Enumerate functors C -> D", {"C", "D"},
       [](Session& s, const auto& a) { return std::vector{s.enum_functors(a[0], a[1])}; }},
      {"enum-nat", "Enumerate transformations F => G", {"F", "G"},
       [](Session& s, const auto& a) { return std::vector{s.enum_nats(a[0], a[1])}; }},
      {"funcat", "Materialize the functor category F(C, D)", {"C", "D"},
       [](Session& s, const auto& a) { return std::vector{s.funcat(a[0], a[1])}; }},
      {"yoneda", "Check the bijection Hom(U, V) = Nat(F_U, F_V)", {"AMB", "U", "V"},
       [](Session& s, const auto& a) { return std::vector{s.yoneda(a[0], a[1], a[2])}; }},
      {"embed", "Check the embedding U -> F_U", {"AMB"},
       [](Session& s, const auto& a) { return std::vector{s.embedding(a[0])}; }},
      {"sieve-check", "Validate a declared sieve", {"NAME"},
       [](Session& s, const auto& a) { return std::vector{s.sieve_check(a[0])}; }},
      {"sieve-enum", "Enumerate sieves on U", {"AMB", "U"},
       [](Session& s, const auto& a) { return std::vector{s.enumerate_sieves(a[0], a[1])}; }},
      {"decompose", "Decompose a sieve over ob(B)", {"NAME"},
       [](Session& s, const auto& a) { return std::vector{s.decompose(a[0])}; }},
  };

  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("file", opt.file, "Workspace file")->required();
    if (!c.params.empty()) {
      sub->add_option("args", opt.args, "Arguments")
          ->required()
          ->expected(static_cast<int>(c.params.size()));
    }
    by_app[sub] = &c;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const Command* cmd = by_app.at(app.get_subcommands().front());
  const Format format = opt.format == "json" ? Format::kJson : Format::kText;

  std::ifstream in(opt.file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << opt.file << "'\n";
    return kInputError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  auto parsed = catsheaf::dsl::parse_workspace(buffer.str(), opt.file, opt.cap);
  if (!parsed.ok()) {
    if (format == Format::kJson) {
      std::cout << serialize_report(catsheaf::dsl::diagnostics_record(parsed.diagnostics), format);
    } else {
      for (const auto& d : parsed.diagnostics) std::cerr << to_string(d) << "\n";
    }
    return kInputError;
  }
  if (cmd->run == nullptr) {
    return emit({{"validate", {opt.file}, true, catsheaf::ValidationReport{}}}, format);
  }

  try {
    Session session(std::move(*parsed.workspace), opt.cap);
    return emit(cmd->run(session, opt.args), format);
  } catch (const catsheaf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
