// Copyright 2026 The cylpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cylpath: construction, enumeration and verification from the shell.
// Exit status: 0 when every check passes, 1 on a verification failure,
// 2 on unusable input (usage, parse, audit).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cylpath/enumerate.hpp"
#include "cylpath/errors.hpp"
#include "cylpath/function_complex.hpp"
#include "cylpath/harness.hpp"
#include "io.hpp"
#include "registry.hpp"

namespace {

using namespace cylpath;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::vector<std::string> loads;
  std::string x, y;
  int level = 0;
  bool list = false;
  std::string file;
  std::string suite;
  std::optional<std::string> fixtures;
  std::optional<int> verify_level;
  std::string format = "text";
  std::string mutate = "none";
};

int run_verify(const Options& o, std::vector<Suite> suites) {
  const auto m = parse_mutation(o.mutate);
  if (!m) throw std::invalid_argument("unknown mutation '" + o.mutate + "'");
  SuiteConfig config{std::move(suites), o.fixtures, o.verify_level, *m};
  const VerificationReport r = run_suite(config);
  std::cout << (o.format == "machine" ? format_machine(r) : format_text(r));
  return r.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial sets, their enrichment, and cylinder and path structures"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--load", o.loads, ".sset documents to register before running")
      ->check(CLI::ExistingFile);

  auto* hom = app.add_subcommand("hom", "Count (and list) the maps X -> Y");
  hom->add_option("X", o.x)->required();
  hom->add_option("Y", o.y)->required();
  hom->add_flag("--list", o.list, "Print every map after the count");

  auto* product_cmd = app.add_subcommand("product", "Print X x Y as an .sset document");
  product_cmd->add_option("X", o.x)->required();
  product_cmd->add_option("Y", o.y)->required();

  auto* fncx = app.add_subcommand("fncx", "Level sizes of the function complex F(X, Y)");
  fncx->add_option("X", o.x)->required();
  fncx->add_option("Y", o.y)->required();
  fncx->add_option("D", o.level, "Top level")->required()->check(CLI::NonNegativeNumber);

  auto* parse = app.add_subcommand("parse", "Parse an .sset or .smap document and reprint it");
  parse->add_option("FILE", o.file)->required()->check(CLI::ExistingFile);

  const std::vector<std::string> suite_names{"axioms", "cylinder", "path", "thm1", "thm2", "thm3"};
  const auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--fixtures", o.fixtures,
                    "default, minimal, zoo, axioms or empty (per-suite default when omitted)");
    cmd->add_option("--level", o.verify_level, "Check levels 0..D");
    cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--mutate", o.mutate,
                    "none, ub-without-diagonal, constant-alpha, skip-tilde, face-table-swap");
  };
  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->add_option("SUITE", o.suite)->required()->check(CLI::IsMember(suite_names));
  add_run_options(verify);
  auto* report = app.add_subcommand("report", "Run every suite in order");
  add_run_options(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    Registry registry;
    for (const auto& path : o.loads) registry.add(parse_sset(read_file(path)));

    if (hom->parsed()) {
      const auto maps = enumerate_maps(registry.resolve(o.x), registry.resolve(o.y));
      std::cout << maps.size() << '\n';
      if (o.list) {
        for (const auto& f : maps) std::cout << format_map(f) << '\n';
      }
      return kOk;
    }
    if (product_cmd->parsed()) {
      std::cout << print_sset(*registry.cache()->product(registry.resolve(o.x),
                                                          registry.resolve(o.y)));
      return kOk;
    }
    if (fncx->parsed()) {
      const SSetPtr x = registry.resolve(o.x);
      const SSetPtr y = registry.resolve(o.y);
      if (x->top_dim() + o.level > kAuditMaxDimension) {
        throw TruncationError("fncx " + x->name() + " " + y->name() + " at level " +
                                  std::to_string(o.level) + " exceeds the enumeration budget",
                              x->top_dim() + o.level, kAuditMaxDimension);
      }
      const auto fc = FunctionComplex::materialize(x, y, o.level, registry.cache());
      for (int n = 0; n <= o.level; ++n) {
        std::cout << n << '\t' << fc->carrier()->level_size(n) << '\t'
                  << (n <= fc->carrier()->top_dim() ? fc->carrier()->count(n) : 0) << '\n';
      }
      return kOk;
    }
    if (parse->parsed()) {
      const std::string text = read_file(o.file);
      std::istringstream first(text);
      std::string keyword;
      while (first >> keyword && keyword.starts_with('#')) {
        first.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      }
      if (keyword == "smap") {
        const MapDocument doc = parse_map(text, registry);
        std::cout << print_map(doc.map, doc.name);
      } else {
        std::cout << print_sset(*parse_sset(text));
      }
      return kOk;
    }
    if (verify->parsed()) return run_verify(o, {*parse_suite(o.suite)});
    if (report->parsed()) return run_verify(o, {});
  } catch (const ParseError& e) {
    std::cerr << "cylpath: " << (o.file.empty() ? std::string("input") : o.file) << ":"
              << e.what() << '\n';
    return kInputError;
  } catch (const TruncationError& e) {
    std::cerr << "cylpath: audit: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cylpath: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
