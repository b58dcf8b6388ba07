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

// Instance generators: paths, cycles, rectangles, random connected graphs,
// random solid grid graphs and the catalog of small connected graphs.

#ifndef GEODETIC_GENERATORS_HPP_
#define GEODETIC_GENERATORS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geodetic/error.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/grid.hpp"

namespace geodetic {

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least three vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

struct GridInstance {
  Graph graph;
  GridEmbedding embedding;
};

// Graph induced on lattice points (unit-distance pairs adjacent); vertex i is
// points[i]. Points must be distinct.
inline GridInstance grid_from_points(std::vector<Point> points) {
  GridInstance out{Graph(points.size()), {std::move(points)}};
  std::unordered_map<std::uint64_t, Vertex> at;
  at.reserve(out.embedding.coords.size());
  for (std::size_t v = 0; v < out.embedding.coords.size(); ++v)
    if (!at.emplace(detail::point_key(out.embedding.coords[v]), static_cast<Vertex>(v)).second)
      throw InvalidArgument("repeated lattice point");
  for (std::size_t v = 0; v < out.embedding.coords.size(); ++v) {
    const Point p = out.embedding.coords[v];
    for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}}) {
      auto it = at.find(detail::point_key(q));
      if (it != at.end()) out.graph.add_edge(static_cast<Vertex>(v), it->second);
    }
  }
  return out;
}

// W x H rectangle; vertex y*W + x sits at (x, y).
inline GridInstance rect_grid(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw InvalidArgument("rectangle sides must be positive");
  GridInstance out{Graph(width * height), {}};
  out.embedding.coords.resize(width * height);
  for (std::size_t y = 0; y < height; ++y)
    for (std::size_t x = 0; x < width; ++x) {
      const auto v = static_cast<Vertex>(y * width + x);
      out.embedding.coords[static_cast<std::size_t>(v)] = {static_cast<int>(x), static_cast<int>(y)};
      if (x > 0) out.graph.add_edge(v - 1, v);
      if (y > 0) out.graph.add_edge(static_cast<Vertex>(v - static_cast<Vertex>(width)), v);
    }
  return out;
}

// Random connected graph: a random recursive tree plus each remaining pair
// with probability p. Vertex labels are shuffled.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  if (n == 0) return g;
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution extra(p);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    g.add_edge(label[v], label[parent(rng)]);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)) && extra(rng))
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

namespace detail {

template <typename Grow>
GridInstance grow_solid(std::size_t max_vertices, std::mt19937_64& rng, Grow&& grow) {
  for (;;) {
    std::vector<Point> pts = grow();
    if (pts.empty() || pts.size() > max_vertices) continue;
    std::shuffle(pts.begin(), pts.end(), rng);
    GridInstance inst = grid_from_points(std::move(pts));
    if (validate_solid_grid(inst.graph, inst.embedding).ok()) return inst;
  }
}

}  // namespace detail

// Random polyomino of `cells` unit squares grown from the origin; the graph
// is induced on the cell corners. Holes are rejected, so the result is a
// solid grid graph with at most max_vertices vertices.
inline GridInstance random_polyomino(std::size_t cells, std::size_t max_vertices, std::mt19937_64& rng) {
  if (cells == 0) throw InvalidArgument("polyomino needs a cell");
  return detail::grow_solid(max_vertices, rng, [&] {
    std::vector<Point> shape{{0, 0}};
    std::set<std::pair<int, int>> have{{0, 0}};
    while (shape.size() < cells) {
      std::uniform_int_distribution<std::size_t> pick(0, shape.size() - 1);
      std::uniform_int_distribution<int> dir(0, 3);
      const Point c = shape[pick(rng)];
      static constexpr int kDx[] = {1, 0, -1, 0}, kDy[] = {0, 1, 0, -1};
      const int d = dir(rng);
      const Point n{c.x + kDx[d], c.y + kDy[d]};
      if (have.insert({n.x, n.y}).second) shape.push_back(n);
    }
    std::set<std::pair<int, int>> corners;
    for (Point c : shape)
      for (int dx = 0; dx < 2; ++dx)
        for (int dy = 0; dy < 2; ++dy) corners.insert({c.x + dx, c.y + dy});
    std::vector<Point> pts;
    for (auto [x, y] : corners) pts.push_back({x, y});
    return pts;
  });
}

// Random connected lattice-point set of `points` points grown from the
// origin, kept only when solid. Unlike random_polyomino this produces thin
// parts, degree-1 vertices and cut vertices.
inline GridInstance random_lattice_grid(std::size_t points, std::mt19937_64& rng) {
  if (points == 0) throw InvalidArgument("lattice set needs a point");
  return detail::grow_solid(points, rng, [&] {
    std::vector<Point> pts{{0, 0}};
    std::set<std::pair<int, int>> have{{0, 0}};
    while (pts.size() < points) {
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      std::uniform_int_distribution<int> dir(0, 3);
      const Point c = pts[pick(rng)];
      static constexpr int kDx[] = {1, 0, -1, 0}, kDy[] = {0, 1, 0, -1};
      const int d = dir(rng);
      const Point n{c.x + kDx[d], c.y + kDy[d]};
      if (have.insert({n.x, n.y}).second) pts.push_back(n);
    }
    return pts;
  });
}

namespace detail {

// Adjacency of a graph on at most 8 vertices as a bit mask over vertex pairs.
inline std::uint32_t pair_bit(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return std::uint32_t{1} << (v * (v - 1) / 2 + u);
}

inline std::uint32_t adjacency_mask(const Graph& g, const std::vector<std::size_t>& perm) {
  std::uint32_t m = 0;
  for (const Edge& e : g.edges())
    m |= pair_bit(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return m;
}

// Smallest adjacency mask over relabelings that list vertices by
// nondecreasing degree. Isomorphic graphs get equal masks.
inline std::uint32_t canonical_mask(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(static_cast<Vertex>(a)) < g.degree(static_cast<Vertex>(b));
  });
  // Permute within runs of equal degree only.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(static_cast<Vertex>(order[j])) == g.degree(static_cast<Vertex>(order[i]))) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  for (auto [a, b] : runs) std::sort(order.begin() + static_cast<std::ptrdiff_t>(a), order.begin() + static_cast<std::ptrdiff_t>(b));
  std::uint32_t best = UINT32_MAX;
  std::vector<std::size_t> perm(n);
  auto visit = [&](auto&& self, std::size_t r) -> void {
    if (r == runs.size()) {
      for (std::size_t pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
      best = std::min(best, adjacency_mask(g, perm));
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
    do self(self, r + 1);
    while (std::next_permutation(first, last));
  };
  visit(visit, 0);
  return best;
}

inline Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (mask & pair_bit(u, v)) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

}  // namespace detail

// One representative of every connected graph on n vertices up to
// isomorphism (1 <= n <= 8), built by attaching a vertex to every smaller
// representative: every connected graph has a non-cut vertex.
inline std::vector<Graph> connected_graph_catalog(std::size_t n) {
  if (n == 0 || n > 8) throw InvalidArgument("catalog covers 1 to 8 vertices");
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint32_t> seen;
    std::vector<Graph> next;
    for (const Graph& base : level)
      for (std::uint32_t nb = 1; nb < (std::uint32_t{1} << (k - 1)); ++nb) {
        Graph g = base;
        const Vertex v = g.add_vertex();
        for (std::size_t u = 0; u + 1 < k; ++u)
          if (nb & (std::uint32_t{1} << u)) g.add_edge(static_cast<Vertex>(u), v);
        const std::uint32_t canon = detail::canonical_mask(g);
        if (seen.insert(canon).second) next.push_back(detail::graph_from_mask(k, canon));
      }
    level = std::move(next);
  }
  return level;
}

// Every connected labeled graph on n vertices (1 <= n <= 7).
inline std::vector<Graph> labeled_connected_graphs(std::size_t n) {
  if (n == 0 || n > 7) throw InvalidArgument("labeled enumeration covers 1 to 7 vertices");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    Graph g = detail::graph_from_mask(n, mask);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace geodetic

#endif  // GEODETIC_GENERATORS_HPP_
