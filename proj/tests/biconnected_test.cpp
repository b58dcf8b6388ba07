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

#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "geodetic/biconnected.hpp"
#include "geodetic/generators.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace geodetic {
namespace {

TEST(Biconnected, PathHasMiddleCut) {
  const auto d = biconnected_decomposition(path_graph(3));
  EXPECT_EQ(d.cut_vertices, (VertexSet{1}));
  EXPECT_EQ(d.components, (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
}

TEST(Biconnected, CycleIsOneBlock) {
  const auto d = biconnected_decomposition(cycle_graph(4));
  EXPECT_TRUE(d.cut_vertices.empty());
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0], (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Biconnected, Bowtie) {
  const auto d = biconnected_decomposition(fixtures::bowtie());
  EXPECT_EQ(d.cut_vertices, (VertexSet{2}));
  EXPECT_EQ(d.components.size(), 2u);
}

TEST(Biconnected, SingletonsAndEdges) {
  const auto one = biconnected_decomposition(Graph(1));
  EXPECT_TRUE(one.cut_vertices.empty());
  EXPECT_EQ(one.components, (std::vector<std::vector<Vertex>>{{0}}));
  const auto k2 = biconnected_decomposition(path_graph(2));
  EXPECT_EQ(k2.components, (std::vector<std::vector<Vertex>>{{0, 1}}));
}

TEST(Biconnected, CutVerticesMatchDeletionOracle) {
  for (const Graph& g : fixtures::random_graphs(31, 120, 14, 0.15)) {
    const auto mask = cut_vertex_mask(g);
    const auto ref = oracle::cut_vertices(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(mask[v] != 0, ref[v] != 0) << v;
  }
}

TEST(Biconnected, EveryEdgeInExactlyOneBlock) {
  for (const Graph& g : fixtures::random_graphs(32, 120, 14, 0.15)) {
    const auto d = biconnected_decomposition(g);
    std::map<Edge, int> owner;
    std::map<Vertex, int> blocks_of;
    for (const auto& comp : d.components) {
      std::set<Vertex> in(comp.begin(), comp.end());
      for (Vertex v : comp) ++blocks_of[v];
      for (const Edge& e : g.edges())
        if (in.count(e.u) && in.count(e.v)) ++owner[e];
    }
    for (const Edge& e : g.edges()) EXPECT_EQ(owner[e], 1) << to_string(e);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const bool cut = std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), static_cast<Vertex>(v));
      EXPECT_EQ(cut, blocks_of[static_cast<Vertex>(v)] >= 2);
    }
  }
}

TEST(Biconnected, DeepPathDoesNotOverflowStack) {
  const auto d = biconnected_decomposition(path_graph(200000));
  EXPECT_EQ(d.cut_vertices.size(), 199998u);
}

}  // namespace
}  // namespace geodetic
