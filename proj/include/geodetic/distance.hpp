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

#ifndef GEODETIC_DISTANCE_HPP_
#define GEODETIC_DISTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "geodetic/bitset.hpp"
#include "geodetic/error.hpp"
#include "geodetic/graph.hpp"

namespace geodetic {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Hop distances from `source`; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int du = dist[static_cast<std::size_t>(u)];
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreachable) {
        dw = du + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// All-pairs hop distances, one BFS per vertex (O(n*m)). Read-only after
// construction.
class DistanceOracle {
 public:
  DistanceOracle() = default;
  explicit DistanceOracle(const Graph& g) : n_(g.vertex_count()), dist_(n_ * n_) {
    for (std::size_t s = 0; s < n_; ++s) {
      auto row = bfs_distances(g, static_cast<Vertex>(s));
      std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  std::size_t vertex_count() const { return n_; }

  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }

  std::span<const int> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

  // Largest finite distance.
  int diameter() const {
    int best = 0;
    for (int d : dist_)
      if (d != kUnreachable && d > best) best = d;
    return best;
  }

 private:
  std::size_t n_ = 0;
  std::vector<int> dist_;
};

inline DistanceOracle bfs_all_pairs(const Graph& g) { return DistanceOracle(g); }

// I(u,v): vertices on some shortest u-v path, i.e. those x with
// d(u,x) + d(x,v) = d(u,v).
inline VertexSet interval(const Graph& g, const DistanceOracle& d, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (!d.reachable(u, v))
    throw DisconnectedGraph("vertices " + std::to_string(u) + " and " +
                            std::to_string(v) + " are in different components");
  const int duv = d(u, v);
  VertexSet out;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    const int a = d(u, static_cast<Vertex>(x));
    const int b = d(static_cast<Vertex>(x), v);
    if (a != kUnreachable && b != kUnreachable && a + b == duv)
      out.push_back(static_cast<Vertex>(x));
  }
  return out;
}

// Interval as a bit set over vertex ids; caller guarantees reachability.
inline Bitset interval_bits(const DistanceOracle& d, Vertex u, Vertex v) {
  const std::size_t n = d.vertex_count();
  Bitset out(n);
  const int duv = d(u, v);
  auto ru = d.row(u);
  auto rv = d.row(v);
  for (std::size_t x = 0; x < n; ++x)
    if (ru[x] != kUnreachable && rv[x] != kUnreachable && ru[x] + rv[x] == duv) out.set(x);
  return out;
}

// Union of I(u,v) over all pairs of `s` equals V(g). Needs one BFS per member
// of `s` only, so it scales to large graphs with small candidate sets.
inline bool is_geodetic_set(const Graph& g, std::span<const Vertex> s) {
  require_connected(g);
  for (Vertex v : s) require_vertex(g, v);
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  const VertexSet members = make_vertex_set({s.begin(), s.end()});
  std::vector<std::vector<int>> dist;
  dist.reserve(members.size());
  for (Vertex v : members) dist.push_back(bfs_distances(g, v));

  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  for (Vertex v : members) {
    if (!covered[static_cast<std::size_t>(v)]) {
      covered[static_cast<std::size_t>(v)] = 1;
      --remaining;
    }
  }
  for (std::size_t i = 0; i < members.size() && remaining > 0; ++i)
    for (std::size_t j = i + 1; j < members.size() && remaining > 0; ++j) {
      const auto& di = dist[i];
      const auto& dj = dist[j];
      const int dij = di[static_cast<std::size_t>(members[j])];
      for (std::size_t x = 0; x < n; ++x)
        if (!covered[x] && di[x] + dj[x] == dij) {
          covered[x] = 1;
          --remaining;
        }
    }
  return remaining == 0;
}

}  // namespace geodetic

#endif  // GEODETIC_DISTANCE_HPP_
