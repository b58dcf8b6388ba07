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

// Solid grid graphs: embedding validation, corner paths and corner vertices,
// and the linear-time 3-approximation that returns the corner vertices.
//
// A corner path is a path with no cut vertex whose two end-vertices have
// degree 2 and whose inner vertices have degree 3. Corner vertices are the
// degree-1 vertices and the end-vertices of corner paths. Every geodetic set
// of a solid grid graph meets every corner path, each corner vertex lies on at
// most two corner paths, and the corner vertices themselves form a geodetic
// set, which gives the factor 3.

#ifndef GEODETIC_GRID_HPP_
#define GEODETIC_GRID_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geodetic/biconnected.hpp"
#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"
#include "geodetic/exact.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// coords[v] is the lattice point of vertex v.
struct GridEmbedding {
  std::vector<Point> coords;
};

struct GridDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct CornerPath {
  std::vector<Vertex> vertices;
  friend auto operator<=>(const CornerPath&, const CornerPath&) = default;
};

namespace detail {

inline std::uint64_t point_key(Point p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint32_t>(p.y);
}

// 0 = east, 1 = north, 2 = west, 3 = south; -1 when not a unit step.
inline int direction(Point from, Point to) {
  const int dx = to.x - from.x, dy = to.y - from.y;
  if (dx == 1 && dy == 0) return 0;
  if (dx == 0 && dy == 1) return 1;
  if (dx == -1 && dy == 0) return 2;
  if (dx == 0 && dy == -1) return 3;
  return -1;
}

// Faces of the plane embedding induced by the coordinates. Neighbors are
// ordered counterclockwise; the successor of dart u->v is v->w with w the
// clockwise neighbor after u around v, so every face lies to the left of
// its darts and bounded faces have positive signed area.
struct FaceTrace {
  struct Face {
    std::vector<Vertex> boundary;  // tail of each dart, in walk order
    long long twice_area = 0;
  };
  std::vector<Face> faces;
  std::size_t exterior = 0;  // index of the face with the smallest signed area
};

// Requires unit-length edges (validated by the caller).
inline FaceTrace trace_faces(const Graph& g, const GridEmbedding& emb) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(static_cast<Vertex>(v));
  // rot[offset[v] + i]: i-th neighbor of v counterclockwise from east.
  std::vector<Vertex> rot(offset[n]);
  std::vector<std::array<int, 4>> slot_of_dir(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::array<Vertex, 4> by_dir{-1, -1, -1, -1};
    for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
      by_dir[static_cast<std::size_t>(direction(emb.coords[v], emb.coords[static_cast<std::size_t>(w)]))] = w;
    std::size_t i = offset[v];
    slot_of_dir[v] = {-1, -1, -1, -1};
    for (int d = 0; d < 4; ++d)
      if (by_dir[static_cast<std::size_t>(d)] != -1) {
        slot_of_dir[v][static_cast<std::size_t>(d)] = static_cast<int>(i - offset[v]);
        rot[i++] = by_dir[static_cast<std::size_t>(d)];
      }
  }
  auto slot_in = [&](Vertex at, Vertex nb) {
    const auto a = static_cast<std::size_t>(at);
    return static_cast<std::size_t>(
        slot_of_dir[a][static_cast<std::size_t>(direction(emb.coords[a], emb.coords[static_cast<std::size_t>(nb)]))]);
  };

  FaceTrace out;
  std::vector<char> used(offset[n], 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t s = 0; s < g.degree(static_cast<Vertex>(v)); ++s) {
      if (used[offset[v] + s]) continue;
      FaceTrace::Face face;
      Vertex tail = static_cast<Vertex>(v);
      std::size_t slot = s;
      while (!used[offset[static_cast<std::size_t>(tail)] + slot]) {
        const auto t = static_cast<std::size_t>(tail);
        used[offset[t] + slot] = 1;
        const Vertex head = rot[offset[t] + slot];
        const auto h = static_cast<std::size_t>(head);
        face.boundary.push_back(tail);
        face.twice_area += static_cast<long long>(emb.coords[t].x) * emb.coords[h].y -
                           static_cast<long long>(emb.coords[h].x) * emb.coords[t].y;
        const std::size_t deg = g.degree(head);
        slot = (slot_in(head, tail) + deg - 1) % deg;
        tail = head;
      }
      out.faces.push_back(std::move(face));
    }
  for (std::size_t f = 1; f < out.faces.size(); ++f)
    if (out.faces[f].twice_area < out.faces[out.exterior].twice_area) out.exterior = f;
  return out;
}

}  // namespace detail

// Checks that `emb` is a solid grid embedding of g: one point per vertex,
// injective, uv an edge iff the points are at unit distance, g connected, and
// every bounded face a unit square. Violations are reported, not thrown.
inline GridDiagnostics validate_solid_grid(const Graph& g, const GridEmbedding& emb) {
  GridDiagnostics diag;
  auto& out = diag.violations;
  const std::size_t n = g.vertex_count();
  if (emb.coords.size() != n) {
    out.push_back("embedding has " + std::to_string(emb.coords.size()) + " points for " +
                  std::to_string(n) + " vertices");
    return diag;
  }
  std::unordered_map<std::uint64_t, Vertex> at;
  at.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, fresh] = at.emplace(detail::point_key(emb.coords[v]), static_cast<Vertex>(v));
    if (!fresh)
      out.push_back("vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                    " share a point");
  }
  for (const Edge& e : g.edges())
    if (detail::direction(emb.coords[static_cast<std::size_t>(e.u)],
                          emb.coords[static_cast<std::size_t>(e.v)]) < 0)
      out.push_back("edge " + to_string(e) + " is not a unit segment");
  for (std::size_t v = 0; v < n; ++v)
    for (Point step : {Point{1, 0}, Point{0, 1}}) {
      const Point q{emb.coords[v].x + step.x, emb.coords[v].y + step.y};
      auto it = at.find(detail::point_key(q));
      if (it != at.end() && !g.has_edge(static_cast<Vertex>(v), it->second))
        out.push_back("vertices " + std::to_string(v) + " and " + std::to_string(it->second) +
                      " are at unit distance but not adjacent");
    }
  if (!is_connected(g)) out.push_back("graph is disconnected");
  if (!out.empty()) return diag;

  const auto trace = detail::trace_faces(g, emb);
  for (std::size_t f = 0; f < trace.faces.size(); ++f) {
    if (f == trace.exterior) continue;
    const auto& face = trace.faces[f];
    if (face.boundary.size() != 4 || face.twice_area != 2)
      out.push_back("bounded face through vertex " + std::to_string(face.boundary.front()) +
                    " has area " + std::to_string(face.twice_area / 2) + " and " +
                    std::to_string(face.boundary.size()) + " sides");
  }
  return diag;
}

namespace detail {

// Ladder walk from the degree-2 vertex v along neighbor u0, with x0 the other
// neighbor of v. Inner vertices u_i (degree 3) are paired with x_{i+1}, the
// unique common neighbor of u_i and x_i other than u_{i-1}; u_{i+1} is the
// neighbor of u_i other than x_{i+1} and u_{i-1}. Returns the corner path
// v, u0, u1, ... when the walk reaches a degree-2 vertex, or an empty list
// when it reaches a cut vertex or a vertex of any other degree.
inline std::vector<Vertex> ladder_walk(const Graph& g, const std::vector<char>& is_cut, Vertex v,
                                       Vertex u0, Vertex x0) {
  std::vector<Vertex> path{v, u0};
  Vertex prev = v, u = u0, x = x0;
  for (std::size_t steps = 0;; ++steps) {
    if (is_cut[static_cast<std::size_t>(u)]) return {};
    const std::size_t deg = g.degree(u);
    if (deg == 2) return path;
    if (deg != 3) return {};
    if (steps > g.vertex_count()) throw StructuralError(v, "corner walk does not terminate");
    Vertex next_x = -1;
    int common = 0;
    for (Vertex w : g.neighbors(u))
      if (w != prev && w != x && g.has_edge(w, x)) {
        next_x = w;
        ++common;
      }
    if (common != 1)
      throw StructuralError(u, "expected exactly one common neighbor with vertex " +
                                   std::to_string(x) + ", found " + std::to_string(common));
    Vertex next_u = -1;
    for (Vertex w : g.neighbors(u))
      if (w != prev && w != next_x) next_u = w;
    path.push_back(next_u);
    prev = u;
    u = next_u;
    x = next_x;
  }
}

template <typename OnPath>
void for_each_corner_path(const Graph& g, const std::vector<char>& is_cut, OnPath&& on_path) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (g.degree(vv) != 2 || is_cut[v]) continue;
    const Vertex a = g.neighbors(vv)[0], b = g.neighbors(vv)[1];
    for (auto [u0, x0] : {std::pair{a, b}, std::pair{b, a}}) {
      auto path = ladder_walk(g, is_cut, vv, u0, x0);
      if (!path.empty()) on_path(std::move(path));
    }
  }
}

}  // namespace detail

// All corner paths, each once, oriented smaller end-vertex first, sorted.
inline std::vector<CornerPath> corner_paths(const Graph& g) {
  std::vector<CornerPath> out;
  if (g.vertex_count() < 2) return out;
  const auto is_cut = cut_vertex_mask(g);
  detail::for_each_corner_path(g, is_cut, [&](std::vector<Vertex> path) {
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    out.push_back({std::move(path)});
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Corner vertices without an embedding, in O(n): degree-1 vertices plus the
// end-vertices found by ladder walks from every non-cut degree-2 vertex. A
// lone vertex is returned as its own corner. Throws StructuralError when a
// ladder step has no unique common neighbor (input not a solid grid).
inline VertexSet corner_vertices(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return {0};
  std::vector<char> corner(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<Vertex>(v)) == 1) corner[v] = 1;
  const auto is_cut = cut_vertex_mask(g);
  detail::for_each_corner_path(g, is_cut, [&](const std::vector<Vertex>& path) {
    corner[static_cast<std::size_t>(path.front())] = 1;
    corner[static_cast<std::size_t>(path.back())] = 1;
  });
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (corner[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

// Corner vertices from a solid grid embedding by walking the exterior face:
// a corner path is a run of boundary vertices that starts and ends at
// non-cut degree-2 vertices with only non-cut degree-3 vertices between.
inline VertexSet corner_vertices_embedded(const Graph& g, const GridEmbedding& emb) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return {0};
  std::vector<char> corner(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<Vertex>(v)) == 1) corner[v] = 1;
  const auto is_cut = cut_vertex_mask(g);
  const auto trace = detail::trace_faces(g, emb);
  const auto& walk = trace.faces[trace.exterior].boundary;
  const std::size_t len = walk.size();
  auto end_vertex = [&](Vertex v) {
    return g.degree(v) == 2 && !is_cut[static_cast<std::size_t>(v)];
  };
  for (std::size_t i = 0; i < len; ++i) {
    if (!end_vertex(walk[i])) continue;
    for (std::size_t j = 1; j < len; ++j) {
      const Vertex w = walk[(i + j) % len];
      if (end_vertex(w)) {
        corner[static_cast<std::size_t>(walk[i])] = corner[static_cast<std::size_t>(w)] = 1;
        break;
      }
      if (g.degree(w) != 3 || is_cut[static_cast<std::size_t>(w)]) break;
    }
  }
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (corner[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

struct GridOptions {
  // Re-check the output with is_geodetic_set (one BFS per corner vertex).
  bool checked = false;
};

// 3-approximate minimum geodetic set of a connected solid grid graph: its
// corner vertices. With an embedding, the embedding is validated first and
// the exterior-face walk is used; otherwise the ladder walk.
inline SolveReport grid_3approx(const Graph& g, const std::optional<GridEmbedding>& emb = std::nullopt,
                                const GridOptions& opts = {}) {
  require_connected(g);
  return detail::timed([&] {
    SolveReport r;
    r.algorithm = "grid";
    VertexSet corners;
    if (g.vertex_count() <= 2) {
      for (std::size_t v = 0; v < g.vertex_count(); ++v) corners.push_back(static_cast<Vertex>(v));
    } else if (emb) {
      const auto diag = validate_solid_grid(g, *emb);
      if (!diag.ok()) throw ValidationError("not a solid grid embedding: " + diag.violations.front());
      corners = corner_vertices_embedded(g, *emb);
    } else {
      corners = corner_vertices(g);
    }
    if (opts.checked && !is_geodetic_set(g, corners))
      throw ValidationError("corner vertices are not a geodetic set; input is not a solid grid graph");
    r.optimum_size = corners.size();
    r.witness = std::move(corners);
    return r;
  });
}

}  // namespace geodetic

#endif  // GEODETIC_GRID_HPP_
