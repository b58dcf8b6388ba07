// Copyright 2026 The Authors.
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

// geodetic: command-line front end.
//
// Exit codes:
//   0  success
//   1  verify found the set does not have the property, or internal error
//   2  usage error
//   3  parse error
//   4  validation error (bad argument, disconnected graph, not a solid grid)
//   5  node budget exhausted
//   6  structural error
//
// GEODETIC_NODE_BUDGET sets the exhaustive-search node budget; --budget wins.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "geodetic/geodetic.hpp"
#include "geodetic/report.hpp"

namespace {

using namespace geodetic;

enum Exit : int {
  kOk = 0,
  kFalse = 1,
  kUsage = 2,
  kParse = 3,
  kValidation = 4,
  kResource = 5,
  kStructural = 6,
};

struct Failure {
  int code;
  std::string message;
};

// Runs f, mapping library errors to exit codes.
template <typename F>
std::optional<Failure> guarded(F&& f) {
  try {
    f();
    return std::nullopt;
  } catch (const ParseError& e) {
    return Failure{kParse, std::string("parse error: ") + e.what()};
  } catch (const ValidationError& e) {
    return Failure{kValidation, std::string("invalid input: ") + e.what()};
  } catch (const InvalidArgument& e) {
    return Failure{kValidation, std::string("invalid argument: ") + e.what()};
  } catch (const ResourceExhausted& e) {
    return Failure{kResource, std::string("resource limit: ") + e.what()};
  } catch (const StructuralError& e) {
    return Failure{kStructural, std::string("structural error: ") + e.what()};
  } catch (const std::exception& e) {
    return Failure{kFalse, std::string("internal error: ") + e.what()};
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::optional<InputFormat> format_of(const std::string& name) {
  if (name == "auto") return std::nullopt;
  if (name == "edgelist") return InputFormat::edgelist;
  if (name == "grid") return InputFormat::grid;
  return InputFormat::rotation;
}

std::uint64_t node_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GEODETIC_NODE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw InvalidArgument(std::string("GEODETIC_NODE_BUDGET is not a positive integer: ") + env);
    return v;
  }
  return kDefaultNodeBudget;
}

struct Output {
  bool text = false;
  void emit(std::ostream& out, const RunReport& r) const {
    if (text)
      out << to_text(r);
    else
      out << to_json(r).dump() << '\n';
  }
};

// --- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string method = "exact";
  std::string format = "auto";
  std::vector<std::string> inputs;
  bool no_verify = false;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
};

RunReport solve_one(const SolveArgs& a, const std::string& path, std::uint64_t budget) {
  const ParsedInput in = parse_input(read_input(path), format_of(a.format));
  const Graph& g = in.graph;
  ExactOptions opts;
  opts.node_budget = budget;
  SolveReport s;
  if (a.method == "exact")
    s = min_geodetic_set(g, opts);
  else if (a.method == "decomposed")
    s = min_geodetic_decomposed(g, opts);
  else if (a.method == "mrsm-exact")
    s = approx_geodetic_via_mrsm(g, RainbowMode::exact, opts);
  else if (a.method == "mrsm-greedy")
    s = approx_geodetic_via_mrsm(g, RainbowMode::greedy, opts);
  else
    s = grid_3approx(g, in.embedding);
  RunReport r = make_report("solve", path, g, s);
  if (!a.no_verify) r.verified = is_geodetic_set(g, s.vertices());
  return r;
}

int run_solve(const SolveArgs& a, const Output& out) {
  const std::uint64_t budget = node_budget(a.budget);
  const std::size_t n = a.inputs.size();
  std::vector<std::optional<RunReport>> reports(n);
  std::vector<std::optional<Failure>> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;)
      failures[i] = guarded([&] { reports[i] = solve_one(a, a.inputs[i], budget); });
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) {
      std::cerr << a.inputs[i] << ": " << failures[i]->message << '\n';
      if (code == kOk) code = failures[i]->code;
      continue;
    }
    out.emit(std::cout, *reports[i]);
    if (reports[i]->verified == false && code == kOk) code = kFalse;
  }
  return code;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string property;
  std::string set;
  std::string format = "auto";
  std::string input = "-";
};

std::vector<long long> split_ids(const std::string& s, char sep) {
  std::vector<long long> out;
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, sep)) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) throw InvalidArgument("bad id '" + tok + "' in --set");
    out.push_back(v);
  }
  return out;
}

// "0,3,4" for vertex sets, "0-1,2-3" for edge sets.
VertexOrEdgeSet parse_set(const std::string& s, bool edges, std::size_t n) {
  auto check = [&](long long v) {
    if (v < 0 || static_cast<unsigned long long>(v) >= n)
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    return static_cast<Vertex>(v);
  };
  if (!edges) {
    VertexSet vs;
    for (long long v : split_ids(s, ',')) vs.push_back(check(v));
    return make_vertex_set(std::move(vs));
  }
  EdgeSet es;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    const auto ends = split_ids(tok, '-');
    if (ends.size() != 2) throw InvalidArgument("bad edge '" + tok + "' in --set; expected u-v");
    es.emplace_back(check(ends[0]), check(ends[1]));
  }
  return make_edge_set(std::move(es));
}

int run_verify(const VerifyArgs& a, const Output& out) {
  const auto p = parse_property(a.property);
  const ParsedInput in = parse_input(read_input(a.input), format_of(a.format));
  const Graph& g = in.graph;
  SolveReport s = detail::timed([&] {
    SolveReport r;
    r.algorithm = "check:" + a.property;
    r.witness = parse_set(a.set, is_edge_property(*p), g.vertex_count());
    r.optimum_size = std::visit([](const auto& x) { return x.size(); }, r.witness);
    return r;
  });
  const auto start = std::chrono::steady_clock::now();
  const bool ok = check_property(g, *p, s.witness);
  s.elapsed = std::chrono::steady_clock::now() - start;
  RunReport r = make_report("verify", a.input, g, s);
  r.verified = ok;
  out.emit(std::cout, r);
  return ok ? kOk : kFalse;
}

// --- gadget --------------------------------------------------------------

struct GadgetArgs {
  std::string kind;
  std::string format = "auto";
  std::string rotation;
  std::string input = "-";
};

int run_gadget(const GadgetArgs& a) {
  const ParsedInput in = parse_input(read_input(a.input), format_of(a.format));
  GadgetOutput h;
  if (a.kind == "planar") {
    std::optional<RotationSystem> rot = in.rotation;
    if (!a.rotation.empty()) {
      auto parsed = parse_input(read_input(a.rotation), InputFormat::rotation);
      if (parsed.graph.edges() != in.graph.edges())
        throw ValidationError("rotation file describes a different graph");
      rot = std::move(parsed.rotation);
    }
    if (!rot) throw InvalidArgument("planar gadget needs a rotation system (--rotation or a rotation input)");
    h = planar_gadget(in.graph, *rot);
  } else if (a.kind == "pendant") {
    h = pendant_gadget(in.graph);
  } else if (a.kind == "apex-pair") {
    h = apex_pair_gadget(in.graph);
  } else {
    h = universal_vertex_gadget(in.graph);
  }
  std::cout << "# " << a.kind << " gadget\n";
  for (std::size_t v = 0; v < h.labels.size(); ++v) std::cout << "# name " << h.labels[v] << ' ' << v << '\n';
  for (const Edge& e : h.auxiliary) std::cout << "# aux " << e.u << ' ' << e.v << '\n';
  write_edgelist(std::cout, h.graph);
  return kOk;
}

// --- gen -----------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::string size;
  std::string format = "auto";
};

std::size_t positive(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v == 0 || s.empty() || s[0] == '-')
    throw InvalidArgument("expected a positive integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

int run_gen(const GenArgs& a) {
  if (a.kind == "rect") {
    const auto x = a.size.find('x');
    if (x == std::string::npos) throw InvalidArgument("rect size must be WxH");
    const auto inst = rect_grid(positive(a.size.substr(0, x)), positive(a.size.substr(x + 1)));
    if (a.format == "edgelist")
      write_edgelist(std::cout, inst.graph);
    else
      write_grid(std::cout, inst.embedding);
    return kOk;
  }
  const std::size_t n = positive(a.size);
  write_edgelist(std::cout, a.kind == "path" ? path_graph(n) : cycle_graph(n));
  return kOk;
}

// --- mrsm ----------------------------------------------------------------

int run_mrsm_build(const std::string& input, const std::string& format) {
  const ParsedInput in = parse_input(read_input(input), format_of(format));
  write_mrsm(std::cout, build_geodetic_mrsm(in.graph, DistanceOracle(in.graph)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodetic sets: exact solvers, approximations, gadgets and checkers"};
  app.require_subcommand(1);
  Output out;
  const std::vector<std::string> formats{"auto", "edgelist", "grid", "rotation"};

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum or approximate geodetic set");
  solve_cmd->add_option("--method", solve.method, "Algorithm")
      ->check(CLI::IsMember({"exact", "decomposed", "mrsm-exact", "mrsm-greedy", "grid"}))
      ->capture_default_str();
  solve_cmd->add_option("--format", solve.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
  solve_cmd->add_flag("--no-verify", solve.no_verify, "Skip the independent geodetic check");
  solve_cmd->add_option("--budget", solve.budget, "Exhaustive-search node budget")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--jobs,-j", solve.jobs, "Inputs processed concurrently")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--text", out.text, "Human-readable output instead of JSON");
  solve_cmd->add_option("inputs", solve.inputs, "Input files ('-' for stdin)")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a set property");
  verify_cmd->add_option("--property", verify.property, "Property")
      ->required()
      ->check(CLI::IsMember({"geodetic", "dominating", "2-dominating", "edge-dominating", "line-geodetic",
                             "good-edge-set"}));
  verify_cmd->add_option("--set", verify.set, "Vertex ids '0,3' or edges '0-1,2-3'")->required();
  verify_cmd->add_option("--format", verify.format, "Input format")->check(CLI::IsMember(formats));
  verify_cmd->add_flag("--text", out.text, "Human-readable output instead of JSON");
  verify_cmd->add_option("input", verify.input, "Input file ('-' for stdin)");

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "Build a reduction gadget; writes an edge list");
  gadget_cmd->add_option("--kind", gadget.kind, "Gadget")
      ->required()
      ->check(CLI::IsMember({"planar", "pendant", "apex-pair", "universal"}));
  gadget_cmd->add_option("--rotation", gadget.rotation, "Rotation system file for the planar gadget");
  gadget_cmd->add_option("--format", gadget.format, "Input format")->check(CLI::IsMember(formats));
  gadget_cmd->add_option("input", gadget.input, "Input file ('-' for stdin)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a test instance");
  gen_cmd->add_option("--kind", gen.kind, "Family")->required()->check(CLI::IsMember({"rect", "path", "cycle"}));
  gen_cmd->add_option("--format", gen.format, "Output format for rect (grid or edgelist)")
      ->check(CLI::IsMember({"auto", "grid", "edgelist"}));
  gen_cmd->add_option("size", gen.size, "WxH for rect, N for path and cycle")->required();

  std::string mrsm_input = "-", mrsm_format = "auto";
  auto* mrsm_cmd = app.add_subcommand("mrsm", "Minimum rainbow subgraph reduction");
  mrsm_cmd->require_subcommand(1);
  auto* mrsm_build = mrsm_cmd->add_subcommand("build", "Write the colored multigraph of a graph");
  mrsm_build->add_option("--format", mrsm_format, "Input format")->check(CLI::IsMember(formats));
  mrsm_build->add_option("input", mrsm_input, "Input file ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  int code = kOk;
  auto failure = guarded([&] {
    if (*solve_cmd)
      code = run_solve(solve, out);
    else if (*verify_cmd)
      code = run_verify(verify, out);
    else if (*gadget_cmd)
      code = run_gadget(gadget);
    else if (*gen_cmd)
      code = run_gen(gen);
    else if (*mrsm_build)
      code = run_mrsm_build(mrsm_input, mrsm_format);
  });
  if (failure) {
    std::cerr << "geodetic: " << failure->message << '\n';
    return failure->code;
  }
  return code;
}
