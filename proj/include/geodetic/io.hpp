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

// Text formats. Lines starting with '#' and blank lines are ignored.
//
//   edgelist   "n <count>" then one "u v" per edge
//   grid       one "v x y" per vertex; adjacency is induced by unit distance
//   rotation   one "v: w0 w1 ..." per vertex, neighbors counterclockwise
//   mrsm       "colors <k>" then one "v w color" per colored edge

#ifndef GEODETIC_IO_HPP_
#define GEODETIC_IO_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geodetic/error.hpp"
#include "geodetic/gadgets.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/grid.hpp"
#include "geodetic/mrsm.hpp"

namespace geodetic {

enum class InputFormat { edgelist, grid, rotation };

struct ParsedInput {
  Graph graph;
  InputFormat format = InputFormat::edgelist;
  std::optional<GridEmbedding> embedding;
  std::optional<RotationSystem> rotation;
};

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

inline std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string s;
  for (std::size_t no = 1; std::getline(in, s); ++no) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos || s[first] == '#') continue;
    out.push_back({no, s});
  }
  return out;
}

// Whitespace-separated integers; the whole line must be consumed.
inline std::vector<long long> integers(const Line& line, std::size_t expected) {
  std::istringstream ss(line.text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line.number, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  if (expected != 0 && out.size() != expected)
    throw ParseError(line.number, "expected " + std::to_string(expected) + " integers, got " +
                                      std::to_string(out.size()));
  return out;
}

inline Vertex vertex_id(const Line& line, long long v, std::size_t n) {
  if (v < 0 || static_cast<unsigned long long>(v) >= n)
    throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

inline std::size_t header(const Line& line, std::string_view keyword) {
  std::istringstream ss(line.text);
  std::string kw;
  long long count = -1;
  std::string rest;
  if (!(ss >> kw) || kw != keyword || !(ss >> count) || count < 0 || (ss >> rest))
    throw ParseError(line.number, "expected '" + std::string(keyword) + " <count>'");
  return static_cast<std::size_t>(count);
}

}  // namespace detail

inline Graph parse_edgelist(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(0, "missing 'n <count>' header");
  const std::size_t n = detail::header(lines.front(), "n");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto v = detail::integers(line, 2);
    const Vertex a = detail::vertex_id(line, v[0], n), b = detail::vertex_id(line, v[1], n);
    if (a == b) throw ParseError(line.number, "self-loop at vertex " + std::to_string(a));
    if (g.has_edge(a, b)) throw ParseError(line.number, "duplicate edge " + to_string(Edge(a, b)));
    g.add_edge(a, b);
  }
  return g;
}

// Vertices are 0..n-1, each listed once; the graph is induced.
inline GridInstance parse_grid(std::istream& in) {
  const auto lines = detail::content_lines(in);
  std::vector<std::optional<Point>> at(lines.size());
  for (const auto& line : lines) {
    const auto v = detail::integers(line, 3);
    const Vertex id = detail::vertex_id(line, v[0], lines.size());
    if (at[static_cast<std::size_t>(id)])
      throw ParseError(line.number, "vertex " + std::to_string(id) + " listed twice");
    for (long long c : {v[1], v[2]})
      if (c < -(1LL << 30) || c > (1LL << 30)) throw ParseError(line.number, "coordinate out of range");
    at[static_cast<std::size_t>(id)] = Point{static_cast<int>(v[1]), static_cast<int>(v[2])};
  }
  std::vector<Point> pts;
  for (const auto& p : at) pts.push_back(*p);  // ids are a permutation of 0..n-1
  try {
    return grid_from_points(std::move(pts));
  } catch (const InvalidArgument& e) {
    throw ValidationError(e.what());
  }
}

// The rotation lists define the graph; each adjacency must be listed from
// both ends.
inline std::pair<Graph, RotationSystem> parse_rotation(std::istream& in) {
  const auto lines = detail::content_lines(in);
  const std::size_t n = lines.size();
  RotationSystem rot;
  rot.order.resize(n);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> line_of(n, 0);
  for (const auto& line : lines) {
    const auto colon = line.text.find(':');
    if (colon == std::string::npos) throw ParseError(line.number, "expected 'v: w0 w1 ...'");
    const auto head = detail::integers({line.number, line.text.substr(0, colon)}, 1);
    const Vertex v = detail::vertex_id(line, head[0], n);
    if (seen[static_cast<std::size_t>(v)])
      throw ParseError(line.number, "vertex " + std::to_string(v) + " listed twice");
    seen[static_cast<std::size_t>(v)] = 1;
    line_of[static_cast<std::size_t>(v)] = line.number;
    for (long long w : detail::integers({line.number, line.text.substr(colon + 1)}, 0)) {
      const Vertex ww = detail::vertex_id(line, w, n);
      auto& o = rot.order[static_cast<std::size_t>(v)];
      if (ww == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(v));
      if (std::find(o.begin(), o.end(), ww) != o.end())
        throw ParseError(line.number, "neighbor " + std::to_string(ww) + " repeated");
      o.push_back(ww);
    }
  }
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex w : rot.order[v]) {
      const auto& back = rot.order[static_cast<std::size_t>(w)];
      if (std::find(back.begin(), back.end(), static_cast<Vertex>(v)) == back.end())
        throw ParseError(line_of[v], "vertex " + std::to_string(w) + " does not list " +
                                         std::to_string(v) + " back");
      if (static_cast<Vertex>(v) < w) g.add_edge(static_cast<Vertex>(v), w);
    }
  return {std::move(g), std::move(rot)};
}

// Picks the format from the first content line: "n ..." is an edge list, a
// colon marks a rotation system, three integers a grid.
inline InputFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(0, "empty input");
  const std::string& first = lines.front().text;
  const auto start = first.find_first_not_of(" \t");
  if (first[start] == 'n') return InputFormat::edgelist;
  if (first.find(':') != std::string::npos) return InputFormat::rotation;
  return InputFormat::grid;
}

inline ParsedInput parse_input(std::string_view text, std::optional<InputFormat> format = std::nullopt) {
  ParsedInput out;
  out.format = format ? *format : detect_format(text);
  std::istringstream in{std::string(text)};
  switch (out.format) {
    case InputFormat::edgelist:
      out.graph = parse_edgelist(in);
      break;
    case InputFormat::grid: {
      auto inst = parse_grid(in);
      out.graph = std::move(inst.graph);
      out.embedding = std::move(inst.embedding);
      break;
    }
    case InputFormat::rotation: {
      auto [g, rot] = parse_rotation(in);
      out.graph = std::move(g);
      out.rotation = std::move(rot);
      break;
    }
  }
  return out;
}

inline void write_edgelist(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_grid(std::ostream& out, const GridEmbedding& emb) {
  for (std::size_t v = 0; v < emb.coords.size(); ++v)
    out << v << ' ' << emb.coords[v].x << ' ' << emb.coords[v].y << '\n';
}

inline void write_rotation(std::ostream& out, const RotationSystem& rot) {
  for (std::size_t v = 0; v < rot.order.size(); ++v) {
    out << v << ':';
    for (Vertex w : rot.order[v]) out << ' ' << w;
    out << '\n';
  }
}

inline void write_mrsm(std::ostream& out, const ColoredMultigraph& cm) {
  out << "colors " << cm.color_universe.size() << '\n';
  for (const auto& e : cm.edges) out << e.v << ' ' << e.w << ' ' << e.color << '\n';
}

// Colors are 0..k-1; vertices are numbered from 0 up to the largest id seen.
inline ColoredMultigraph parse_mrsm(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw ParseError(0, "missing 'colors <k>' header");
  ColoredMultigraph cm;
  const std::size_t k = detail::header(lines.front(), "colors");
  for (std::size_t c = 0; c < k; ++c) cm.color_universe.push_back(static_cast<Vertex>(c));
  Vertex top = -1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto v = detail::integers(lines[i], 3);
    for (long long x : v)
      if (x < 0 || x > (1LL << 30)) throw ParseError(lines[i].number, "id out of range");
    if (static_cast<std::size_t>(v[2]) >= k)
      throw ParseError(lines[i].number, "color " + std::to_string(v[2]) + " out of range");
    ColoredEdge e{static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]), static_cast<Vertex>(v[2])};
    if (e.v == e.w) throw ParseError(lines[i].number, "loop at vertex " + std::to_string(e.v));
    if (e.v > e.w) std::swap(e.v, e.w);
    top = std::max(top, e.w);
    cm.edges.push_back(e);
  }
  cm.vertex_count = static_cast<std::size_t>(top + 1);
  std::sort(cm.edges.begin(), cm.edges.end());
  validate(cm);
  return cm;
}

// FNV-1a over the canonical edge list; identifies an instance in reports.
inline std::uint64_t fingerprint(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(g.vertex_count());
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

}  // namespace geodetic

#endif  // GEODETIC_IO_HPP_
