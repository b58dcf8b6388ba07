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

// Run reports for the command-line tool. Needs nlohmann/json.

#ifndef GEODETIC_REPORT_HPP_
#define GEODETIC_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "geodetic/exact.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/io.hpp"
#include "geodetic/properties.hpp"

namespace geodetic {

struct RunReport {
  std::string command;
  std::string algorithm;
  std::string input;  // path, or "-" for stdin
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::uint64_t hash = 0;
  std::size_t size = 0;
  VertexOrEdgeSet witness;
  std::optional<bool> verified;  // unset when checking was skipped
  double elapsed_ms = 0;
  std::uint64_t nodes = 0;
};

inline RunReport make_report(std::string command, std::string input, const Graph& g,
                             const SolveReport& s) {
  RunReport r;
  r.command = std::move(command);
  r.algorithm = s.algorithm;
  r.input = std::move(input);
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.hash = fingerprint(g);
  r.size = s.optimum_size;
  r.witness = s.witness;
  r.elapsed_ms = static_cast<double>(s.elapsed.count()) / 1e6;
  r.nodes = s.nodes_explored;
  return r;
}

inline std::string hex64(std::uint64_t h) {
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["algorithm"] = r.algorithm;
  j["input"] = {{"path", r.input},
                {"vertices", r.vertex_count},
                {"edges", r.edge_count},
                {"hash", hex64(r.hash)}};
  j["size"] = r.size;
  if (const auto* vs = std::get_if<VertexSet>(&r.witness)) {
    j["vertices"] = *vs;
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (const Edge& e : std::get<EdgeSet>(r.witness)) arr.push_back({e.u, e.v});
    j["edges"] = arr;
  }
  j["verified"] = r.verified ? nlohmann::ordered_json(*r.verified) : nlohmann::ordered_json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  j["nodes"] = r.nodes;
  return j;
}

inline std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << r.command << " " << r.algorithm << " on " << r.input << " (" << r.vertex_count
      << " vertices, " << r.edge_count << " edges)\n";
  out << "size: " << r.size << "\n";
  if (const auto* vs = std::get_if<VertexSet>(&r.witness)) {
    out << "vertices:";
    for (Vertex v : *vs) out << ' ' << v;
  } else {
    out << "edges:";
    for (const Edge& e : std::get<EdgeSet>(r.witness)) out << ' ' << e.u << '-' << e.v;
  }
  out << "\nverified: " << (r.verified ? (*r.verified ? "yes" : "no") : "skipped") << "\n";
  out << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace geodetic

#endif  // GEODETIC_REPORT_HPP_
