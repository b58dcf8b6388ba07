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

#ifndef GEODETIC_LINE_GRAPH_HPP_
#define GEODETIC_LINE_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

// Line graph together with the edge <-> vertex bijection. Line-graph vertex i
// is the i-th edge of g.edges().
struct LineGraphMap {
  Graph line_graph;
  EdgeSet edge_of_vertex;

  Vertex vertex_of(const Edge& e) const {
    auto it = std::lower_bound(edge_of_vertex.begin(), edge_of_vertex.end(), e);
    if (it == edge_of_vertex.end() || *it != e)
      throw InvalidArgument("edge " + to_string(e) + " is not in the graph");
    return static_cast<Vertex>(it - edge_of_vertex.begin());
  }
};

inline LineGraphMap line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("line graph of an edgeless graph");
  LineGraphMap out{Graph(g.edge_count()), g.edges()};
  // incident[v]: line-graph ids of edges at v; each pair is adjacent.
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (std::size_t i = 0; i < out.edge_of_vertex.size(); ++i) {
    const Edge& e = out.edge_of_vertex[i];
    incident[static_cast<std::size_t>(e.u)].push_back(static_cast<Vertex>(i));
    incident[static_cast<std::size_t>(e.v)].push_back(static_cast<Vertex>(i));
  }
  // Two distinct edges of a simple graph share at most one endpoint, so
  // no pair is added twice.
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b)
        out.line_graph.add_edge(list[a], list[b]);
  return out;
}

// d(e,f): 1 when e and f share an endpoint, d+1 for edges sharing an endpoint
// with an edge at distance d; d(e,e) = 0. Layered search over the edges of g
// directly, without materializing the line graph. kUnreachable when e and f
// lie in different components.
inline int edge_distance(const Graph& g, const Edge& e, const Edge& f) {
  require_edge(g, e);
  require_edge(g, f);
  if (e == f) return 0;
  // Edges discovered at distance d are the edges incident to frontier
  // vertices that were not seen before.
  std::vector<char> seen_vertex(g.vertex_count(), 0);
  std::vector<Vertex> frontier{e.u, e.v};
  seen_vertex[static_cast<std::size_t>(e.u)] = seen_vertex[static_cast<std::size_t>(e.v)] = 1;
  EdgeSet seen_edges{e};
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (Vertex y : g.neighbors(x)) {
        const Edge h(x, y);
        if (h == f) return d;
        auto it = std::lower_bound(seen_edges.begin(), seen_edges.end(), h);
        if (it != seen_edges.end() && *it == h) continue;
        seen_edges.insert(it, h);
        if (!seen_vertex[static_cast<std::size_t>(y)]) {
          seen_vertex[static_cast<std::size_t>(y)] = 1;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return kUnreachable;
}

}  // namespace geodetic

#endif  // GEODETIC_LINE_GRAPH_HPP_
