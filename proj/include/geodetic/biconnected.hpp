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

#ifndef GEODETIC_BICONNECTED_HPP_
#define GEODETIC_BICONNECTED_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

struct BiconnectedDecomposition {
  VertexSet cut_vertices;
  // Vertex lists of the maximal biconnected subgraphs, each sorted, the list
  // itself sorted lexicographically. A bridge is a 2-vertex component and an
  // isolated vertex a 1-vertex component.
  std::vector<std::vector<Vertex>> components;
};

namespace detail {

// Iterative lowpoint DFS (Hopcroft-Tarjan). Calls on_component with the
// edges of each biconnected component as it is closed; fills is_cut.
template <typename OnComponent>
void lowpoint_dfs(const Graph& g, std::vector<char>& is_cut, OnComponent&& on_component,
                  bool collect_edges) {
  const std::size_t n = g.vertex_count();
  // Per-vertex DFS state kept together: one cache line serves a visit.
  struct State {
    int disc = -1;
    int low = 0;
    Vertex parent = -1;
    std::uint32_t next_child = 0;
  };
  std::vector<State> st(n);
  // Flat copy of the adjacency lists.
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(static_cast<Vertex>(v));
  std::vector<Vertex> flat(offset[n]);
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(static_cast<Vertex>(v));
    std::copy(nb.begin(), nb.end(), flat.begin() + static_cast<std::ptrdiff_t>(offset[v]));
  }
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  is_cut.assign(n, 0);
  int timer = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (st[root].disc != -1) continue;
    st[root].disc = st[root].low = timer++;
    stack.push_back(static_cast<Vertex>(root));
    std::size_t root_children = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      State& su = st[static_cast<std::size_t>(u)];
      const std::size_t first = offset[static_cast<std::size_t>(u)];
      if (su.next_child < offset[static_cast<std::size_t>(u) + 1] - first) {
        const Vertex w = flat[first + su.next_child++];
        State& sw = st[static_cast<std::size_t>(w)];
        if (sw.disc == -1) {
          sw.parent = u;
          sw.disc = sw.low = timer++;
          if (collect_edges) edge_stack.emplace_back(u, w);
          stack.push_back(w);
        } else if (w != su.parent && sw.disc < su.disc) {
          su.low = std::min(su.low, sw.disc);
          if (collect_edges) edge_stack.emplace_back(u, w);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = su.parent;
      if (p == -1) continue;
      State& sp = st[static_cast<std::size_t>(p)];
      sp.low = std::min(sp.low, su.low);
      if (su.low >= sp.disc) {
        if (p == static_cast<Vertex>(root))
          ++root_children;
        else
          is_cut[static_cast<std::size_t>(p)] = 1;
        if (collect_edges) {
          std::vector<std::pair<Vertex, Vertex>> comp;
          while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e.first == p && e.second == u) break;
          }
          on_component(comp);
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
}

}  // namespace detail

// Articulation-point mask, O(n + m).
inline std::vector<char> cut_vertex_mask(const Graph& g) {
  std::vector<char> is_cut;
  detail::lowpoint_dfs(g, is_cut, [](const auto&) {}, false);
  return is_cut;
}

inline BiconnectedDecomposition biconnected_decomposition(const Graph& g) {
  BiconnectedDecomposition out;
  std::vector<char> is_cut;
  detail::lowpoint_dfs(
      g, is_cut,
      [&](const std::vector<std::pair<Vertex, Vertex>>& edges) {
        std::vector<Vertex> vs;
        for (auto [a, b] : edges) {
          vs.push_back(a);
          vs.push_back(b);
        }
        out.components.push_back(make_vertex_set(std::move(vs)));
      },
      true);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(static_cast<Vertex>(v));
    if (g.degree(static_cast<Vertex>(v)) == 0)
      out.components.push_back({static_cast<Vertex>(v)});
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

}  // namespace geodetic

#endif  // GEODETIC_BICONNECTED_HPP_
