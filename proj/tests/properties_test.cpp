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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "geodetic/generators.hpp"
#include "geodetic/properties.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace geodetic {
namespace {

TEST(Property, NamesRoundTrip) {
  for (Property p : {Property::geodetic, Property::dominating, Property::two_dominating,
                     Property::edge_dominating, Property::line_geodetic, Property::good_edge_set})
    EXPECT_EQ(parse_property(name(p)), p);
  EXPECT_FALSE(parse_property("triple-dominating").has_value());
  EXPECT_TRUE(is_edge_property(Property::good_edge_set));
  EXPECT_FALSE(is_edge_property(Property::two_dominating));
}

TEST(CheckProperty, Examples) {
  EXPECT_TRUE(check_property(cycle_graph(4), Property::two_dominating, VertexSet{0, 2}));
  EXPECT_FALSE(check_property(cycle_graph(4), Property::two_dominating, VertexSet{0, 1}));
  EXPECT_TRUE(check_property(path_graph(3), Property::edge_dominating, EdgeSet{{0, 1}}));
  EXPECT_TRUE(check_property(path_graph(5), Property::good_edge_set, EdgeSet{{0, 1}, {3, 4}}));
  EXPECT_TRUE(check_property(path_graph(5), Property::line_geodetic, EdgeSet{{0, 1}, {3, 4}}));
  EXPECT_TRUE(check_property(cycle_graph(4), Property::dominating, VertexSet{0, 2}));
  EXPECT_FALSE(check_property(cycle_graph(4), Property::dominating, VertexSet{0}));
}

TEST(CheckProperty, GoodEdgeSetNeedsWitnessesAtDistanceTwoOrThree) {
  // On P6 the end edges are at edge distance 4: line geodetic but not good.
  const Graph p6 = path_graph(6);
  EXPECT_TRUE(check_property(p6, Property::line_geodetic, EdgeSet{{0, 1}, {4, 5}}));
  EXPECT_FALSE(check_property(p6, Property::good_edge_set, EdgeSet{{0, 1}, {4, 5}}));
  EXPECT_TRUE(check_property(p6, Property::good_edge_set, p6.edges()));
}

TEST(CheckProperty, WrongCarrierOrUnknownMember) {
  EXPECT_THROW(check_property(path_graph(3), Property::edge_dominating, VertexSet{0}), InvalidArgument);
  EXPECT_THROW(check_property(path_graph(3), Property::dominating, EdgeSet{{0, 1}}), InvalidArgument);
  EXPECT_THROW(check_property(path_graph(3), Property::edge_dominating, EdgeSet{{0, 2}}), InvalidArgument);
  EXPECT_THROW(check_property(path_graph(3), Property::dominating, VertexSet{7}), InvalidArgument);
  EXPECT_THROW(check_property(path_graph(3), Property::geodetic, EdgeSet{{0, 1}}), InvalidArgument);
}

TEST(CheckProperty, DisconnectedInputs) {
  const Graph g = fixtures::two_disjoint_edges();
  EXPECT_THROW(check_property(g, Property::geodetic, VertexSet{0, 1, 2, 3}), DisconnectedGraph);
  EXPECT_THROW(check_property(g, Property::line_geodetic, g.edges()), DisconnectedGraph);
  EXPECT_TRUE(check_property(g, Property::dominating, VertexSet{0, 2}));
  EXPECT_TRUE(check_property(g, Property::edge_dominating, g.edges()));
}

// Every vertex property against the naive definitions on random subsets.
TEST(CheckProperty, VertexPropertiesMatchDefinitions) {
  std::mt19937_64 rng(101);
  std::bernoulli_distribution coin(0.45);
  for (const Graph& g : fixtures::random_graphs(102, 80, 9, 0.3)) {
    const PropertyModel dom(g, Property::dominating), two(g, Property::two_dominating);
    for (int t = 0; t < 15; ++t) {
      VertexSet vs;
      std::vector<int> s;
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (coin(rng)) {
          vs.push_back(static_cast<Vertex>(v));
          s.push_back(static_cast<int>(v));
        }
      EXPECT_EQ(dom.check(vs), oracle::is_dominating(g, s, 1));
      EXPECT_EQ(two.check(vs), oracle::is_dominating(g, s, 2));
      EXPECT_EQ(check_property(g, Property::geodetic, vs), oracle::is_geodetic(g, s));
    }
  }
}

TEST(CheckProperty, EdgePropertiesMatchDefinitions) {
  std::mt19937_64 rng(103);
  std::bernoulli_distribution coin(0.4);
  for (const Graph& g : fixtures::random_graphs(104, 80, 8, 0.3)) {
    if (g.edge_count() == 0) continue;
    const auto metric = oracle::edge_metric(g);
    const PropertyModel ed(g, Property::edge_dominating), lg(g, Property::line_geodetic),
        good(g, Property::good_edge_set);
    for (int t = 0; t < 15; ++t) {
      EdgeSet es;
      std::vector<int> s;
      for (std::size_t i = 0; i < metric.edges.size(); ++i)
        if (coin(rng)) {
          es.push_back(metric.edges[i]);
          s.push_back(static_cast<int>(i));
        }
      EXPECT_EQ(ed.check(es), oracle::is_edge_dominating(metric, s));
      EXPECT_EQ(lg.check(es), oracle::is_line_geodetic(metric, s, false));
      EXPECT_EQ(good.check(es), oracle::is_line_geodetic(metric, s, true));
    }
  }
}

TEST(CoverageModel, CoverageIsMonotone) {
  for (const Graph& g : fixtures::random_graphs(105, 30, 9, 0.3)) {
    const CoverageModel m = geodetic_model(g, DistanceOracle(g));
    std::vector<int> items;
    Bitset prev(m.target_count);
    for (std::size_t i = 0; i < m.item_count; ++i) {
      items.push_back(static_cast<int>(i));
      const Bitset cur = m.coverage(items);
      EXPECT_TRUE(cur.contains(prev));
      prev = cur;
    }
    EXPECT_TRUE(m.covers(items));
  }
}

TEST(PropertyModel, ToSetInvertsItems) {
  const Graph g = cycle_graph(5);
  const PropertyModel pm(g, Property::line_geodetic);
  const EdgeSet es{{0, 1}, {2, 3}};
  const auto items = pm.items_of(es);
  EXPECT_EQ(std::get<EdgeSet>(pm.to_set(items)), es);
}

}  // namespace
}  // namespace geodetic
