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

#ifndef GEODETIC_PROPERTIES_HPP_
#define GEODETIC_PROPERTIES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geodetic/bitset.hpp"
#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/line_graph.hpp"

namespace geodetic {

enum class Property {
  geodetic,
  dominating,
  two_dominating,
  edge_dominating,
  line_geodetic,
  good_edge_set,
};

inline bool is_edge_property(Property p) {
  return p == Property::edge_dominating || p == Property::line_geodetic ||
         p == Property::good_edge_set;
}

inline std::string_view name(Property p) {
  switch (p) {
    case Property::geodetic: return "geodetic";
    case Property::dominating: return "dominating";
    case Property::two_dominating: return "2-dominating";
    case Property::edge_dominating: return "edge-dominating";
    case Property::line_geodetic: return "line-geodetic";
    case Property::good_edge_set: return "good-edge-set";
  }
  return "?";
}

inline std::optional<Property> parse_property(std::string_view s) {
  for (Property p : {Property::geodetic, Property::dominating, Property::two_dominating,
                     Property::edge_dominating, Property::line_geodetic,
                     Property::good_edge_set})
    if (name(p) == s) return p;
  return std::nullopt;
}

using VertexOrEdgeSet = std::variant<VertexSet, EdgeSet>;

// Covering structure shared by every set property in the library. Items are
// the candidate members (vertices or edges), targets the elements that must
// be covered. A chosen item set S covers
//
//   union over s in S of single[s]  ∪  union over s < t in S of pair(s,t)
//
// and satisfies the property iff that union is every target. All five set
// properties and the geodetic property have this shape, which lets one
// exhaustive search engine serve them all. Coverage is monotone in S.
struct CoverageModel {
  std::size_t item_count = 0;
  std::size_t target_count = 0;
  std::vector<Bitset> single;
  std::vector<Bitset> pairs;  // item_count^2 entries, row-major; may be empty

  bool has_pairs() const { return !pairs.empty(); }
  const Bitset& pair(std::size_t i, std::size_t j) const {
    return pairs[i * item_count + j];
  }

  Bitset coverage(std::span<const int> items) const {
    Bitset cov(target_count);
    for (std::size_t a = 0; a < items.size(); ++a) {
      const auto i = static_cast<std::size_t>(items[a]);
      cov |= single[i];
      if (has_pairs())
        for (std::size_t b = a + 1; b < items.size(); ++b)
          cov |= pair(i, static_cast<std::size_t>(items[b]));
    }
    return cov;
  }

  bool covers(std::span<const int> items) const {
    return coverage(items).count() == target_count;
  }
};

namespace detail {

inline CoverageModel empty_model(std::size_t items, std::size_t targets, bool with_pairs) {
  CoverageModel m;
  m.item_count = items;
  m.target_count = targets;
  m.single.assign(items, Bitset(targets));
  if (with_pairs) m.pairs.assign(items * items, Bitset(targets));
  return m;
}

// Pair masks I(u,v) over a connected graph's distance oracle.
inline void fill_interval_pairs(CoverageModel& m, const DistanceOracle& d,
                                bool restrict_to_2_or_3) {
  const std::size_t n = m.item_count;
  for (std::size_t u = 0; u < n; ++u) {
    m.single[u].set(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      const int duv = d(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (restrict_to_2_or_3 && duv != 2 && duv != 3) continue;
      Bitset b = interval_bits(d, static_cast<Vertex>(u), static_cast<Vertex>(v));
      m.pairs[u * n + v] = b;
      m.pairs[v * n + u] = std::move(b);
    }
  }
}

}  // namespace detail

// Geodetic-set model: items and targets are vertices, pair(u,v) = I(u,v).
inline CoverageModel geodetic_model(const Graph& g, const DistanceOracle& d) {
  auto m = detail::empty_model(g.vertex_count(), g.vertex_count(), true);
  detail::fill_interval_pairs(m, d, false);
  return m;
}

// Evaluates one property on one graph. Building the model is the expensive
// part; checks afterwards cost O(|S|^2) bit-set unions.
class PropertyModel {
 public:
  PropertyModel(const Graph& g, Property p) : property_(p), vertex_count_(g.vertex_count()) {
    if (p == Property::geodetic || p == Property::line_geodetic || p == Property::good_edge_set)
      require_connected(g);
    switch (p) {
      case Property::geodetic:
        model_ = geodetic_model(g, DistanceOracle(g));
        break;
      case Property::dominating: {
        model_ = detail::empty_model(g.vertex_count(), g.vertex_count(), false);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
          model_.single[v].set(v);
          for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            model_.single[v].set(static_cast<std::size_t>(w));
        }
        break;
      }
      case Property::two_dominating: {
        const std::size_t n = g.vertex_count();
        model_ = detail::empty_model(n, n, true);
        std::vector<Bitset> nbr(n, Bitset(n));
        for (std::size_t v = 0; v < n; ++v) {
          model_.single[v].set(v);
          for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            nbr[v].set(static_cast<std::size_t>(w));
        }
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = u + 1; v < n; ++v) {
            Bitset common = nbr[u];
            common &= nbr[v];
            model_.pairs[u * n + v] = common;
            model_.pairs[v * n + u] = std::move(common);
          }
        break;
      }
      case Property::edge_dominating:
      case Property::line_geodetic:
      case Property::good_edge_set: {
        edges_ = g.edges();
        const std::size_t m = edges_.size();
        if (m == 0) {
          model_ = detail::empty_model(0, 0, false);
          break;
        }
        const LineGraphMap lg = line_graph(g);
        if (p == Property::edge_dominating) {
          model_ = detail::empty_model(m, m, false);
          for (std::size_t e = 0; e < m; ++e) {
            model_.single[e].set(e);
            for (Vertex f : lg.line_graph.neighbors(static_cast<Vertex>(e)))
              model_.single[e].set(static_cast<std::size_t>(f));
          }
        } else {
          model_ = detail::empty_model(m, m, true);
          detail::fill_interval_pairs(model_, DistanceOracle(lg.line_graph),
                                      p == Property::good_edge_set);
        }
        break;
      }
    }
  }

  Property property() const { return property_; }
  bool edge_based() const { return is_edge_property(property_); }
  const CoverageModel& coverage() const { return model_; }
  // Item order for edge-based properties (canonical edge order).
  const EdgeSet& edges() const { return edges_; }

  std::vector<int> items_of(const VertexOrEdgeSet& s) const {
    std::vector<int> items;
    if (edge_based()) {
      const auto* es = std::get_if<EdgeSet>(&s);
      if (!es) throw InvalidArgument(std::string(name(property_)) + " expects an edge set");
      for (const Edge& e : make_edge_set(*es)) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
          throw InvalidArgument("edge " + to_string(e) + " is not in the graph");
        items.push_back(static_cast<int>(it - edges_.begin()));
      }
    } else {
      const auto* vs = std::get_if<VertexSet>(&s);
      if (!vs) throw InvalidArgument(std::string(name(property_)) + " expects a vertex set");
      for (Vertex v : make_vertex_set(*vs)) {
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_count_)
          throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        items.push_back(v);
      }
    }
    return items;
  }

  bool check(const VertexOrEdgeSet& s) const { return model_.covers(items_of(s)); }

  VertexOrEdgeSet to_set(std::span<const int> items) const {
    if (edge_based()) {
      EdgeSet es;
      for (int i : items) es.push_back(edges_[static_cast<std::size_t>(i)]);
      return make_edge_set(std::move(es));
    }
    return make_vertex_set({items.begin(), items.end()});
  }

 private:
  Property property_;
  std::size_t vertex_count_;
  CoverageModel model_;
  EdgeSet edges_;
};

// Exact check of a set property by definition:
//   dominating      every vertex outside S has a neighbor in S
//   two_dominating  every vertex outside S has at least two neighbors in S
//   edge_dominating every edge outside S shares an endpoint with an edge of S
//   line_geodetic   every edge outside S lies on a shortest path (in the line
//                   graph) between two edges of S
//   good_edge_set   as line_geodetic, with the two witnesses at edge
//                   distance 2 or 3
// Vertex-based selectors need a VertexSet, edge-based ones an EdgeSet.
inline bool check_property(const Graph& g, Property p, const VertexOrEdgeSet& s) {
  if (p == Property::geodetic) {
    const auto* vs = std::get_if<VertexSet>(&s);
    if (!vs) throw InvalidArgument("geodetic expects a vertex set");
    return is_geodetic_set(g, *vs);
  }
  return PropertyModel(g, p).check(s);
}

}  // namespace geodetic

#endif  // GEODETIC_PROPERTIES_HPP_
