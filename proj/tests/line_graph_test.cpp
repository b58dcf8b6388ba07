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

#include <vector>

#include <gtest/gtest.h>

#include "geodetic/generators.hpp"
#include "geodetic/line_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace geodetic {
namespace {

TEST(LineGraph, SmallExamples) {
  const auto p3 = line_graph(path_graph(3));
  EXPECT_EQ(p3.line_graph.vertex_count(), 2u);
  EXPECT_EQ(p3.line_graph.edge_count(), 1u);
  const auto k3 = line_graph(complete_graph(3));
  EXPECT_EQ(k3.line_graph.edge_count(), 3u);
  const auto star = line_graph(fixtures::star(3));
  EXPECT_EQ(star.line_graph.vertex_count(), 3u);
  EXPECT_EQ(star.line_graph.edge_count(), 3u);
}

TEST(LineGraph, VertexEdgeBijection) {
  const Graph g = cycle_graph(5);
  const auto lg = line_graph(g);
  ASSERT_EQ(lg.edge_of_vertex, g.edges());
  for (std::size_t i = 0; i < lg.edge_of_vertex.size(); ++i)
    EXPECT_EQ(lg.vertex_of(lg.edge_of_vertex[i]), static_cast<Vertex>(i));
  EXPECT_THROW(lg.vertex_of(Edge(0, 2)), InvalidArgument);
  EXPECT_THROW(line_graph(Graph(3)), InvalidArgument);
}

TEST(EdgeDistance, Examples) {
  const Graph p4 = path_graph(4), p5 = path_graph(5);
  EXPECT_EQ(edge_distance(p4, {0, 1}, {1, 2}), 1);
  EXPECT_EQ(edge_distance(p4, {0, 1}, {2, 3}), 2);
  EXPECT_EQ(edge_distance(p5, {0, 1}, {3, 4}), 3);
  EXPECT_EQ(edge_distance(p5, {1, 2}, {1, 2}), 0);
  EXPECT_EQ(edge_distance(fixtures::two_disjoint_edges(), {0, 1}, {2, 3}), kUnreachable);
  EXPECT_THROW(edge_distance(p4, {0, 2}, {1, 2}), InvalidArgument);
}

TEST(EdgeDistance, EqualsLineGraphHopDistance) {
  std::vector<Graph> graphs;
  for (const Graph& g : fixtures::catalog_upto(6))
    if (g.edge_count() >= 1 && g.edge_count() <= 10) graphs.push_back(g);
  for (const Graph& g : fixtures::random_graphs(41, 60, 9, 0.2))
    if (g.edge_count() >= 1 && g.edge_count() <= 10) graphs.push_back(g);
  for (const Graph& g : graphs) {
    const auto lg = line_graph(g);
    const DistanceOracle d(lg.line_graph);
    const auto metric = oracle::edge_metric(g);
    const auto& es = lg.edge_of_vertex;
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j) {
        const int got = edge_distance(g, es[i], es[j]);
        ASSERT_EQ(got, d(static_cast<Vertex>(i), static_cast<Vertex>(j)));
        ASSERT_EQ(got, metric.d[i][j]);
      }
  }
}

}  // namespace
}  // namespace geodetic
