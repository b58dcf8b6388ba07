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

#ifndef GEODETIC_GRAPH_HPP_
#define GEODETIC_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geodetic/error.hpp"

namespace geodetic {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Undirected edge in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;

inline VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

inline EdgeSet make_edge_set(std::vector<Edge> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

// Simple undirected graph on vertices 0..n-1. Neighbor lists keep insertion
// order. add_edge rejects self-loops, parallel edges and out-of-range ids, so
// every Graph value satisfies the simple-graph invariants.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}
  Graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : adjacency_(vertex_count) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)].size();
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& la = adjacency_[static_cast<std::size_t>(a)];
    const auto& lb = adjacency_[static_cast<std::size_t>(b)];
    const auto& shorter = la.size() <= lb.size() ? la : lb;
    const Vertex target = la.size() <= lb.size() ? b : a;
    return std::find(shorter.begin(), shorter.end(), target) != shorter.end();
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  Vertex add_vertex() {
    adjacency_.emplace_back();
    return static_cast<Vertex>(adjacency_.size() - 1);
  }

  void add_edge(Vertex a, Vertex b) {
    if (!contains(a) || !contains(b))
      throw InvalidArgument("edge " + std::to_string(a) + "-" +
                            std::to_string(b) + " has an endpoint out of range");
    if (a == b)
      throw InvalidArgument("self-loop at vertex " + std::to_string(a));
    if (has_edge(a, b))
      throw InvalidArgument("duplicate edge " + std::to_string(a) + "-" +
                            std::to_string(b));
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
    ++edge_count_;
  }

  // Canonical edges in lexicographic order. Line-graph vertex ids and every
  // edge-indexed structure in the library follow this order.
  EdgeSet edges() const {
    EdgeSet out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
      for (Vertex w : adjacency_[u])
        if (static_cast<std::size_t>(w) > u) out.emplace_back(static_cast<Vertex>(u), w);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v))
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(g.vertex_count()) + ")");
}

inline void require_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e))
    throw InvalidArgument("edge " + to_string(e) + " is not in the graph");
}

// Connected components by BFS; component[v] is the index of v's component.
inline std::vector<int> component_labels(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    queue.clear();
    queue.push_back(static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : g.neighbors(queue[head]))
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = next;
          queue.push_back(w);
        }
    ++next;
  }
  return label;
}

// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  const auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
}

inline bool has_triangle(const Graph& g) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(static_cast<Vertex>(u));
    for (std::size_t i = 0; i < nu.size(); ++i)
      for (std::size_t j = i + 1; j < nu.size(); ++j)
        if (g.has_edge(nu[i], nu[j])) return true;
  }
  return false;
}

// A vertex whose neighborhood is a clique. Isolated vertices qualify.
inline bool is_simplicial(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i)
    for (std::size_t j = i + 1; j < nv.size(); ++j)
      if (!g.has_edge(nv[i], nv[j])) return false;
  return true;
}

// Subgraph induced by `vertices` (any order); vertex i of the result is
// vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i])) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) h.add_edge(static_cast<Vertex>(i), j);
    }
  return h;
}

}  // namespace geodetic

#endif  // GEODETIC_GRAPH_HPP_
