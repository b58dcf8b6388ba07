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

#ifndef GEODETIC_TESTS_FIXTURES_HPP_
#define GEODETIC_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "geodetic/generators.hpp"
#include "geodetic/graph.hpp"

namespace fixtures {

using geodetic::Graph;
using geodetic::Vertex;

inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, static_cast<Vertex>(i));
  return g;
}

// Cycles 0-1-2-3-4 and 4-5-6-7-8 sharing vertex 4.
inline Graph two_c5_sharing_vertex() {
  return Graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}});
}

inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

inline Graph two_disjoint_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

// Seeded stream of random connected graphs with 1..max_n vertices.
inline std::vector<Graph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t max_n, double p) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(geodetic::random_connected_graph(size(rng), p, rng));
  return out;
}

// Every connected graph on 1..max_n vertices up to isomorphism.
inline std::vector<Graph> catalog_upto(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : geodetic::connected_graph_catalog(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace fixtures

#endif  // GEODETIC_TESTS_FIXTURES_HPP_
