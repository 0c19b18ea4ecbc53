// Copyright 2026 The tpcalc Authors
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

#include "tpcalc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpcalc/axioms.hpp"
#include "tpcalc/decision.hpp"
#include "tpcalc/error.hpp"
#include "tpcalc/semantics.hpp"
#include "tpcalc/textio.hpp"

namespace tpcalc::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UserError("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

Diagram load_diagram(const std::string& path, SemiringTag tag) {
  return parse_diagram(read_input(path), tag);
}

bool use_full(const CliConfig& cfg, const Diagram& d) {
  switch (cfg.fragment) {
    case FragmentMode::Functional: return false;
    case FragmentMode::Full: return true;
    case FragmentMode::Auto: return !d.is_functional();
  }
  return true;
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, display_width(s)), ' ');
}

std::vector<std::string> names_of(const Obj& x, bool full) {
  std::vector<std::string> out;
  for (const BasisName& n : full ? enumerate_full(x) : enumerate(x)) out.push_back(to_string(n));
  return out;
}

void print_matrix(std::ostream& out, const SemMatrix& m, const Obj& dom, const Obj& cod, bool full) {
  const auto cols = names_of(dom, full);
  const auto rows = names_of(cod, full);
  std::size_t w0 = 0;
  for (const auto& r : rows) w0 = std::max(w0, display_width(r));
  std::vector<std::size_t> w(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    w[j] = display_width(cols[j]);
    for (std::size_t i = 0; i < m.rows; ++i) w[j] = std::max(w[j], display_width(to_string(m.at(i, j))));
  }
  auto emit = [&out](std::string line) {
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  };
  std::string header = pad("", w0);
  for (std::size_t j = 0; j < cols.size(); ++j) header += "  " + pad(cols[j], w[j]);
  emit(header);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::string line = pad(rows[i], w0);
    for (std::size_t j = 0; j < m.cols; ++j) line += "  " + pad(to_string(m.at(i, j)), w[j]);
    emit(line);
  }
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  Diagram d = load_diagram(cfg.inputs.at(0), cfg.tag);
  const bool full = use_full(cfg, d);
  SemMatrix m = full ? eval_full(d, cfg.tag) : eval(d, cfg.tag);
  if (cfg.format == Format::Json) {
    json j = json::parse(matrix_to_json(m));
    j["fragment"] = full ? "full" : "functional";
    j["dom"] = print_obj(d.dom());
    j["cod"] = print_obj(d.cod());
    j["row_names"] = names_of(d.cod(), full);
    j["col_names"] = names_of(d.dom(), full);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "dom " << print_obj(d.dom()) << "  cod " << print_obj(d.cod()) << "  semiring "
      << tag_name(cfg.tag) << "  fragment " << (full ? "full" : "functional") << "\n";
  print_matrix(out, m, d.dom(), d.cod(), full);
  return kExitOk;
}

int cmd_equiv(const CliConfig& cfg, std::ostream& out) {
  Diagram d = load_diagram(cfg.inputs.at(0), cfg.tag);
  Diagram e = load_diagram(cfg.inputs.at(1), cfg.tag);
  if (d.dom() != e.dom() || d.cod() != e.cod()) {
    throw TypeError("boundaries differ: " + print_obj(d.dom()) + " -> " + print_obj(d.cod()) +
                    " vs " + print_obj(e.dom()) + " -> " + print_obj(e.cod()));
  }
  if (cfg.fragment == FragmentMode::Functional && (!d.is_functional() || !e.is_functional())) {
    throw UserError("functional fragment requested but an input uses unit");
  }
  Verdict v = equiv(d, e, cfg.tag);
  if (cfg.format == Format::Json) {
    json j;
    j["equivalent"] = v.equivalent;
    if (v.witness) {
      j["witness"] = {{"row", to_string(v.witness->row)},
                      {"col", to_string(v.witness->col)},
                      {"left", to_string(v.witness->left)},
                      {"right", to_string(v.witness->right)}};
    }
    out << j.dump(2) << "\n";
  } else if (v.equivalent) {
    out << "equivalent\n";
  } else {
    out << "distinct\n  at row " << to_string(v.witness->row) << ", column "
        << to_string(v.witness->col) << ": " << to_string(v.witness->left) << " vs "
        << to_string(v.witness->right) << "\n";
  }
  return v.equivalent ? kExitOk : kExitDistinct;
}

int cmd_normalize(const CliConfig& cfg, std::ostream& out) {
  Diagram d = load_diagram(cfg.inputs.at(0), cfg.tag);
  NormalForm nf = use_full(cfg, d) ? synthesize_full(eval_full(d, cfg.tag), d.dom(), d.cod())
                                   : synthesize(eval(d, cfg.tag), d.dom(), d.cod());
  out << print_diagram(nf.diagram) << "\n";
  return kExitOk;
}

int cmd_synth(const CliConfig& cfg, const std::string& dom_text, const std::string& cod_text,
              std::ostream& out) {
  SemMatrix m = matrix_from_json(read_input(cfg.inputs.at(0)));
  const Obj dom = parse_obj(dom_text);
  const Obj cod = parse_obj(cod_text);
  bool full = cfg.fragment == FragmentMode::Full;
  if (cfg.fragment == FragmentMode::Auto) {
    full = m.rows == dim(cod) + 1 && m.cols == dim(dom) + 1;
  }
  NormalForm nf = full ? synthesize_full(m, dom, cod) : synthesize(m, dom, cod);
  out << print_diagram(nf.diagram) << "\n";
  return kExitOk;
}

int cmd_axioms(const CliConfig& cfg, int depth, const std::vector<std::string>& rings,
               std::size_t threads, std::ostream& out) {
  FuzzOptions opt;
  opt.seed = cfg.seed;
  opt.iterations = cfg.iterations;
  opt.depth_bound = depth;
  opt.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  if (!rings.empty()) {
    opt.semirings.clear();
    for (const std::string& r : rings) {
      auto t = tag_from_name(r);
      if (!t) throw UserError("unknown semiring '" + r + "'");
      if (!semiring(*t).is_exact) throw UserError("the soundness harness needs an exact semiring");
      opt.semirings.push_back(*t);
    }
  }
  FuzzReport report = fuzz(opt);
  out << (cfg.format == Format::Json ? report.to_json() + "\n" : report.to_table());
  return report.failures() == 0 ? kExitOk : kExitDistinct;
}

int cmd_render(const CliConfig& cfg, std::ostream& out) {
  Diagram d = load_diagram(cfg.inputs.at(0), cfg.tag);
  out << export_dot(d);
  return kExitOk;
}

int cmd_dims(const std::string& obj_text, const CliConfig& cfg, std::ostream& out) {
  const Obj x = parse_obj(obj_text);
  const bool full = cfg.fragment == FragmentMode::Full;
  const auto names = full ? enumerate_full(x) : enumerate(x);
  if (cfg.format == Format::Json) {
    json j;
    j["object"] = print_obj(x);
    j["dim"] = dim(x);
    json list = json::array();
    for (const BasisName& n : names) list.push_back(to_string(n));
    j["enumeration"] = list;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "dim " << dim(x) << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) out << i << "  " << to_string(names[i]) << "\n";
  return kExitOk;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("TPCALC_SEED");
  if (s == nullptr || *s == '\0') return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw UserError(std::string("TPCALC_SEED is not a number: ") + s);
  return v;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor-plus diagram evaluator, equivalence checker and normalizer", "tpcalc"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string ring = "q";
  std::string fragment = "auto";
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  CliConfig cfg;
  app.add_option("--semiring", ring, "bool|nat|qnn|q|qi|qr2|f64")->capture_default_str();
  app.add_option("--fragment", fragment, "functional|full|auto")
      ->check(CLI::IsMember({"functional", "full", "auto"}))
      ->capture_default_str();
  app.add_option("--format", format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "random seed (falls back to TPCALC_SEED, then 42)");
  app.add_option("--iters", cfg.iterations, "instances per schema and semiring")->capture_default_str();

  auto* eval_cmd = app.add_subcommand("eval", "print the matrix semantics of a diagram");
  eval_cmd->add_option("file", cfg.inputs, "diagram file ('-' for stdin)")->required()->expected(1);

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two diagrams");
  equiv_cmd->add_option("files", cfg.inputs, "two diagram files")->required()->expected(2);

  auto* norm_cmd = app.add_subcommand("normalize", "print the normal form of a diagram");
  norm_cmd->add_option("file", cfg.inputs, "diagram file")->required()->expected(1);

  std::string dom_text;
  std::string cod_text;
  auto* synth_cmd = app.add_subcommand("synth", "build a diagram from a matrix JSON file");
  synth_cmd->add_option("matrix", cfg.inputs, "matrix JSON file")->required()->expected(1);
  synth_cmd->add_option("--dom", dom_text, "domain object, e.g. [(1+1)]")->required();
  synth_cmd->add_option("--cod", cod_text, "codomain object")->required();

  int depth = 3;
  std::vector<std::string> rings;
  std::size_t threads = 0;
  auto* axioms_cmd = app.add_subcommand("axioms", "fuzz every axiom schema for soundness");
  axioms_cmd->add_option("--depth", depth, "color depth bound")->capture_default_str();
  axioms_cmd->add_option("--semirings", rings, "semirings to test (default bool,nat,q)")
      ->delimiter(',');
  axioms_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* render_cmd = app.add_subcommand("render", "emit Graphviz DOT for a diagram");
  render_cmd->add_option("file", cfg.inputs, "diagram file")->required()->expected(1);

  std::string obj_text;
  auto* dims_cmd = app.add_subcommand("dims", "print the dimension and basis of an object");
  dims_cmd->add_option("object", obj_text, "object, e.g. [(1+1),(1+1)]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    auto tag = tag_from_name(ring);
    if (!tag) throw UserError("unknown semiring '" + ring + "'");
    cfg.tag = *tag;
    cfg.fragment = fragment == "functional" ? FragmentMode::Functional
                   : fragment == "full"     ? FragmentMode::Full
                                            : FragmentMode::Auto;
    cfg.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
    cfg.seed = seed ? *seed : seed_from_env();

    if (eval_cmd->parsed()) return cmd_eval(cfg, out);
    if (equiv_cmd->parsed()) return cmd_equiv(cfg, out);
    if (norm_cmd->parsed()) return cmd_normalize(cfg, out);
    if (synth_cmd->parsed()) return cmd_synth(cfg, dom_text, cod_text, out);
    if (axioms_cmd->parsed()) return cmd_axioms(cfg, depth, rings, threads, out);
    if (render_cmd->parsed()) return cmd_render(cfg, out);
    if (dims_cmd->parsed()) return cmd_dims(obj_text, cfg, out);
    throw InvariantError("no subcommand dispatched");
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace tpcalc::cli
