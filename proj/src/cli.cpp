// Copyright 2026 The umv Authors
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

#include "umv/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "umv/checker.hpp"
#include "umv/graph.hpp"
#include "umv/parse.hpp"
#include "umv/wire.hpp"

namespace umv {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliFailure {
  int code;
};

std::string slurp(const std::string& path, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << path << ": cannot open\n";
    throw CliFailure{64};
  }
  return *text;
}

TypeDefs load_defs(const std::string& path, std::ostream& err) {
  std::string text = slurp(path, err);
  try {
    return parse_type_defs(text);
  } catch (const ParseError& e) {
    err << format_error(path, e) << "\n";
    throw CliFailure{2};
  }
}

RawGraph load_graph(const std::string& path, std::ostream& err) {
  std::string text = slurp(path, err);
  WireBytes bytes(text.begin(), text.end());
  auto res = decode(bytes);
  if (const auto* e = std::get_if<DecodeError>(&res)) {
    err << path << ": " << to_string(*e) << "\n";
    throw CliFailure{2};
  }
  return std::get<RawGraph>(std::move(res));
}

TypeScheme load_scheme(const std::string& text, const TypeDefs& defs,
                       std::ostream& err) {
  try {
    return parse_type_scheme(text, defs);
  } catch (const ParseError& e) {
    err << format_error("<type>", e) << "\n";
    throw CliFailure{2};
  }
}

int cmd_encode(const std::string& defs_path, const std::string& value_path,
               const std::string& out_path, std::ostream& err) {
  TypeDefs defs = load_defs(defs_path, err);
  std::string text = slurp(value_path, err);
  ExprRef expr;
  try {
    expr = parse_value_literal(text, defs);
  } catch (const ParseError& e) {
    err << format_error(value_path, e) << "\n";
    return 2;
  }
  WireBytes bytes = encode(delinearize(translate(defs, expr)));
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    err << out_path << ": cannot write\n";
    return 64;
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  return 0;
}

int cmd_check(const std::string& defs_path, const std::string& scheme_text,
              const std::string& in_path, bool print_value, std::ostream& out,
              std::ostream& err) {
  TypeDefs defs = load_defs(defs_path, err);
  TypeScheme scheme = load_scheme(scheme_text, defs, err);
  RawGraph g = load_graph(in_path, err);
  auto res = check_root(defs, scheme, linearize(g));
  if (const auto* f = std::get_if<CheckFailure>(&res)) {
    err << to_string(*f) << "\n";
    return 1;
  }
  if (print_value)
    out << print_expr(std::get<CheckSuccess>(res).expr) << "\n";
  else
    out << "ACCEPT\n";
  return 0;
}

int cmd_lint(const std::string& in_path, std::ostream& out, std::ostream& err) {
  RawGraph g = load_graph(in_path, err);
  size_t shared = 0;
  std::vector<uint32_t> indeg(g.size(), 0);
  for (NodeId n = 0; n < g.size(); ++n) {
    const GraphNode& gn = g.node(n);
    if (gn.is_leaf()) continue;
    for (NodeId c : gn.block().children) ++indeg[c];
  }
  for (uint32_t d : indeg)
    if (d >= 2) ++shared;
  size_t sccs = tarjan_scc(g).size();

  // Deepest fix nesting in the linearized term, without recursion so chains
  // of any length lint fine.
  size_t max_fix = 0;
  {
    std::vector<std::pair<ValueRef, size_t>> stack{{linearize(g), 0}};
    while (!stack.empty()) {
      auto [v, d] = stack.back();
      stack.pop_back();
      max_fix = std::max(max_fix, d);
      const auto& n = v->node;
      if (const auto* b = std::get_if<VBlock>(&n))
        for (const auto& f : b->fields) stack.emplace_back(f, d);
      else if (const auto* l = std::get_if<VLet>(&n)) {
        stack.emplace_back(l->bound, d);
        stack.emplace_back(l->body, d);
      } else if (const auto* fx = std::get_if<VFix>(&n)) {
        stack.emplace_back(fx->body, d + 1);
      }
    }
  }
  out << "nodes: " << g.size() << "\n"
      << "shared nodes: " << shared << "\n"
      << "sccs: " << sccs << "\n"
      << "max fix depth: " << max_fix << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Typed verification of untyped serialized value graphs"};
  app.require_subcommand(1);

  std::string defs_path, scheme_text, in_path, value_path, out_path;

  auto* enc = app.add_subcommand("encode", "Serialize a value literal");
  enc->add_option("--defs", defs_path, "Type declarations file")->required();
  enc->add_option("value", value_path, "Value literal file")->required();
  enc->add_option("-o,--output", out_path, "Output .umv file")->required();

  auto* chk = app.add_subcommand("check", "Verify a stream against a scheme");
  chk->add_option("--defs", defs_path, "Type declarations file")->required();
  chk->add_option("--type", scheme_text, "Goal type scheme")->required();
  chk->add_option("input", in_path, "Input .umv file")->required();

  auto* dec = app.add_subcommand("decode", "Verify and pretty-print");
  dec->add_option("--defs", defs_path, "Type declarations file")->required();
  dec->add_option("--type", scheme_text, "Goal type scheme")->required();
  dec->add_option("input", in_path, "Input .umv file")->required();

  auto* lnt = app.add_subcommand("lint", "Graph statistics of a stream");
  lnt->add_option("input", in_path, "Input .umv file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 64;
  }

  try {
    if (enc->parsed()) return cmd_encode(defs_path, value_path, out_path, err);
    if (chk->parsed())
      return cmd_check(defs_path, scheme_text, in_path, false, out, err);
    if (dec->parsed())
      return cmd_check(defs_path, scheme_text, in_path, true, out, err);
    return cmd_lint(in_path, out, err);
  } catch (const CliFailure& f) {
    return f.code;
  }
}

}  // namespace umv
