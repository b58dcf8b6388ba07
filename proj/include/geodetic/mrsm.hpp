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

// Minimum rainbow subgraph of a multigraph (MRSM) and its use as a geodetic
// set solver: vertex pairs (v,w) carry one parallel edge per vertex of the
// interval I(v,w), colored by that vertex. A vertex set spans an edge of
// every color exactly when it is a geodetic set.

#ifndef GEODETIC_MRSM_HPP_
#define GEODETIC_MRSM_HPP_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geodetic/bitset.hpp"
#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"
#include "geodetic/exact.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

struct ColoredEdge {
  Vertex v = 0;
  Vertex w = 0;
  Vertex color = 0;

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

struct ColoredMultigraph {
  std::size_t vertex_count = 0;
  std::vector<ColoredEdge> edges;     // v < w; sorted by (v, w, color)
  std::vector<Vertex> color_universe;  // sorted
};

// Checks the multigraph invariants: ids in range, v != w, no repeated color
// on one pair.
inline void validate(const ColoredMultigraph& cm) {
  const auto n = static_cast<Vertex>(cm.vertex_count);
  std::vector<ColoredEdge> sorted;
  sorted.reserve(cm.edges.size());
  for (ColoredEdge e : cm.edges) {
    if (e.v < 0 || e.w < 0 || e.v >= n || e.w >= n)
      throw ValidationError("colored edge endpoint out of range");
    if (e.v == e.w) throw ValidationError("colored edge is a loop at " + std::to_string(e.v));
    if (e.v > e.w) std::swap(e.v, e.w);
    sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("repeated color on a vertex pair");
}

// One edge (v,w) colored u for every unordered pair v != w and every
// u in I(v,w), endpoints included. Every vertex is a color.
inline ColoredMultigraph build_geodetic_mrsm(const Graph& g, const DistanceOracle& d) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidArgument("MRSM reduction needs at least two vertices");
  require_connected(g);
  ColoredMultigraph cm;
  cm.vertex_count = n;
  for (std::size_t v = 0; v < n; ++v) {
    cm.color_universe.push_back(static_cast<Vertex>(v));
    for (std::size_t w = v + 1; w < n; ++w)
      for (Vertex u : interval(g, d, static_cast<Vertex>(v), static_cast<Vertex>(w)))
        cm.edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(w), u});
  }
  return cm;
}

namespace detail {

struct RainbowIndex {
  std::vector<std::size_t> color_slot;  // color id -> position in universe
  CoverageModel model;                  // items = vertices, targets = colors
  std::vector<std::size_t> edges_per_color;
};

inline RainbowIndex index_rainbow(const ColoredMultigraph& cm) {
  validate(cm);
  RainbowIndex ix;
  const std::size_t n = cm.vertex_count;
  const std::size_t k = cm.color_universe.size();
  Vertex max_color = -1;
  for (Vertex c : cm.color_universe) max_color = std::max(max_color, c);
  for (const auto& e : cm.edges) max_color = std::max(max_color, e.color);
  ix.color_slot.assign(static_cast<std::size_t>(max_color + 1), k);
  for (std::size_t i = 0; i < k; ++i)
    ix.color_slot[static_cast<std::size_t>(cm.color_universe[i])] = i;

  ix.model.item_count = n;
  ix.model.target_count = k;
  ix.model.single.assign(n, Bitset(k));
  ix.model.pairs.assign(n * n, Bitset(k));
  ix.edges_per_color.assign(k, 0);
  for (const auto& e : cm.edges) {
    const std::size_t slot = ix.color_slot[static_cast<std::size_t>(e.color)];
    if (slot == k) throw ValidationError("edge color " + std::to_string(e.color) +
                                         " is not in the color universe");
    const auto v = static_cast<std::size_t>(e.v), w = static_cast<std::size_t>(e.w);
    ix.model.pairs[v * n + w].set(slot);
    ix.model.pairs[w * n + v].set(slot);
    ++ix.edges_per_color[slot];
  }
  for (std::size_t i = 0; i < k; ++i)
    if (ix.edges_per_color[i] == 0)
      throw ValidationError("color " + std::to_string(cm.color_universe[i]) +
                            " appears on no edge");
  return ix;
}

}  // namespace detail

// Minimum vertex set spanning at least one edge of every color. Colors
// carried by a single edge force both its endpoints.
inline VertexSet rainbow_exact(const ColoredMultigraph& cm, const ExactOptions& opts = {},
                               std::uint64_t* nodes_explored = nullptr) {
  const auto ix = detail::index_rainbow(cm);
  std::vector<char> forced(cm.vertex_count, 0);
  if (opts.pin_mandatory)
    for (const auto& e : cm.edges)
      if (ix.edges_per_color[ix.color_slot[static_cast<std::size_t>(e.color)]] == 1)
        forced[static_cast<std::size_t>(e.v)] = forced[static_cast<std::size_t>(e.w)] = 1;
  std::vector<int> pinned, candidates;
  for (std::size_t v = 0; v < cm.vertex_count; ++v)
    (forced[v] ? pinned : candidates).push_back(static_cast<int>(v));
  detail::CoverSearch search(ix.model, {}, pinned, candidates, opts.node_budget);
  auto extra = search.minimum();
  if (nodes_explored) *nodes_explored = search.nodes();
  std::vector<Vertex> members(pinned.begin(), pinned.end());
  members.insert(members.end(), extra->begin(), extra->end());
  return make_vertex_set(std::move(members));
}

// Greedy colorful-subgraph heuristic. Seeds with the pair whose parallel
// edges carry the most distinct colors (lexicographically first on ties),
// then adds the vertex covering the most new colors (smallest id on ties).
// If no single vertex gains anything, the best pair of outside vertices is
// added instead. Deterministic; no approximation guarantee.
inline VertexSet rainbow_greedy(const ColoredMultigraph& cm) {
  const auto ix = detail::index_rainbow(cm);
  const std::size_t n = cm.vertex_count;
  const std::size_t k = cm.color_universe.size();
  const auto& model = ix.model;
  if (k == 0) return {};

  std::vector<char> in_set(n, 0);
  std::vector<Vertex> members;
  Bitset covered(k);

  auto add_best_pair = [&] {
    std::size_t best = 0;
    std::pair<std::size_t, std::size_t> arg{n, n};
    for (std::size_t v = 0; v < n; ++v) {
      if (in_set[v]) continue;
      for (std::size_t w = v + 1; w < n; ++w) {
        if (in_set[w]) continue;
        // Gain of adding both v and w given the current set.
        Bitset gain = model.pair(v, w);
        for (Vertex s : members) {
          gain |= model.pair(static_cast<std::size_t>(s), v);
          gain |= model.pair(static_cast<std::size_t>(s), w);
        }
        const std::size_t g = covered.count_new(gain);
        if (g > best) {
          best = g;
          arg = {v, w};
        }
      }
    }
    if (arg.first == n) throw ValidationError("greedy cannot extend the colorful subgraph");
    for (std::size_t x : {arg.first, arg.second}) {
      for (Vertex s : members) covered |= model.pair(static_cast<std::size_t>(s), x);
      members.push_back(static_cast<Vertex>(x));
      in_set[x] = 1;
    }
    covered |= model.pair(arg.first, arg.second);
  };

  add_best_pair();
  while (covered.count() < k) {
    std::size_t best = 0, arg = n;
    Bitset gain(k);
    for (std::size_t x = 0; x < n; ++x) {
      if (in_set[x]) continue;
      gain.clear();
      for (Vertex s : members) gain |= model.pair(static_cast<std::size_t>(s), x);
      const std::size_t g = covered.count_new(gain);
      if (g > best) {
        best = g;
        arg = x;
      }
    }
    if (arg == n) {
      add_best_pair();
      continue;
    }
    for (Vertex s : members) covered |= model.pair(static_cast<std::size_t>(s), arg);
    members.push_back(static_cast<Vertex>(arg));
    in_set[arg] = 1;
  }
  return make_vertex_set(std::move(members));
}

enum class RainbowMode { exact, greedy };

// Geodetic set via the MRSM reduction. The result is re-checked with
// is_geodetic_set; a failure there is a bug and raises std::logic_error.
inline SolveReport approx_geodetic_via_mrsm(const Graph& g, RainbowMode mode,
                                            const ExactOptions& opts = {}) {
  require_connected(g);
  return detail::timed([&] {
    SolveReport r;
    r.algorithm = mode == RainbowMode::exact ? "mrsm-exact" : "mrsm-greedy";
    if (g.vertex_count() <= 1) {
      VertexSet all;
      if (g.vertex_count() == 1) all.push_back(0);
      r.optimum_size = all.size();
      r.witness = std::move(all);
      return r;
    }
    const auto cm = build_geodetic_mrsm(g, DistanceOracle(g));
    VertexSet s = mode == RainbowMode::exact ? rainbow_exact(cm, opts, &r.nodes_explored)
                                             : rainbow_greedy(cm);
    if (!is_geodetic_set(g, s))
      throw std::logic_error("colorful subgraph is not a geodetic set");
    r.optimum_size = s.size();
    r.witness = std::move(s);
    return r;
  });
}

}  // namespace geodetic

#endif  // GEODETIC_MRSM_HPP_
