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

// Hardness gadgets:
//   planar_gadget           dominating set of a subcubic plane graph
//                           -> geodetic set of a planar graph
//   pendant_gadget          edge dominating set -> good edge set
//   apex_pair_gadget        good edge set -> line geodetic set
//   universal_vertex_gadget 2-dominating set -> geodetic set, diameter 2
// plus normalize_line_geodetic, which moves a line geodetic set of an
// apex-pair gadget off the apex edges without growing it.

#ifndef GEODETIC_GADGETS_HPP_
#define GEODETIC_GADGETS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geodetic/bitset.hpp"
#include "geodetic/error.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/properties.hpp"

namespace geodetic {

// order[v]: neighbors of v counterclockwise; edge v-order[v][i] is e_i^v.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;
};

struct GadgetOutput {
  Graph graph;
  std::map<std::string, Vertex> ids;  // role label -> vertex
  std::vector<std::string> labels;    // vertex -> role label
  EdgeSet auxiliary;                  // E' for the apex-pair gadget

  Vertex id(const std::string& label) const {
    auto it = ids.find(label);
    if (it == ids.end()) throw InvalidArgument("no gadget vertex labeled " + label);
    return it->second;
  }
};

namespace detail {

class GadgetBuilder {
 public:
  Vertex add(std::string label) {
    const Vertex v = out_.graph.add_vertex();
    if (!out_.ids.emplace(label, v).second)
      throw std::logic_error("duplicate gadget label " + label);
    out_.labels.push_back(std::move(label));
    return v;
  }
  void connect(Vertex a, Vertex b) { out_.graph.add_edge(a, b); }
  GadgetOutput& output() { return out_; }
  GadgetOutput finish() { return std::move(out_); }

 private:
  GadgetOutput out_{Graph(0), {}, {}, {}};
};

inline std::string tag(const std::string& role, Vertex v) {
  return role + "[" + std::to_string(v) + "]";
}

// Checks that rot is a rotation system of g and that it is planar, by
// counting the faces it induces against Euler's formula.
inline void check_rotation(const Graph& g, const RotationSystem& rot) {
  const std::size_t n = g.vertex_count();
  if (rot.order.size() != n)
    throw ValidationError("rotation system has " + std::to_string(rot.order.size()) +
                          " entries for " + std::to_string(n) + " vertices");
  for (std::size_t v = 0; v < n; ++v) {
    const auto vv = static_cast<Vertex>(v);
    auto listed = rot.order[v];
    std::sort(listed.begin(), listed.end());
    std::vector<Vertex> actual(g.neighbors(vv).begin(), g.neighbors(vv).end());
    std::sort(actual.begin(), actual.end());
    if (listed != actual)
      throw ValidationError("rotation at vertex " + std::to_string(v) +
                            " is not a permutation of its neighbors");
  }
  // slot_of(v, w): position of w in rot.order[v]
  auto slot_of = [&](Vertex v, Vertex w) {
    const auto& o = rot.order[static_cast<std::size_t>(v)];
    return static_cast<std::size_t>(std::find(o.begin(), o.end(), w) - o.begin());
  };
  std::map<std::pair<Vertex, Vertex>, char> used;
  std::size_t faces = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex w : rot.order[v]) {
      if (used.count({static_cast<Vertex>(v), w})) continue;
      ++faces;
      Vertex tail = static_cast<Vertex>(v), head = w;
      while (!used.count({tail, head})) {
        used[{tail, head}] = 1;
        const auto& around = rot.order[static_cast<std::size_t>(head)];
        const std::size_t deg = around.size();
        const Vertex next = around[(slot_of(head, tail) + deg - 1) % deg];
        tail = head;
        head = next;
      }
    }
  std::size_t components = 0;
  const auto labels = component_labels(g);
  for (int c : labels) components = std::max(components, static_cast<std::size_t>(c) + 1);
  // Faces are traced per component, so each plane component satisfies
  // V - E + F = 2; an isolated vertex traces none and is counted as one.
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<Vertex>(v)) == 0) ++isolated;
  const long long euler = static_cast<long long>(n) - static_cast<long long>(g.edge_count()) +
                          static_cast<long long>(faces + isolated);
  if (euler != 2 * static_cast<long long>(components))
    throw ValidationError("rotation system is not planar");
}

inline void require_triangle_free(const Graph& g) {
  if (has_triangle(g)) throw ValidationError("input graph contains a triangle");
}

}  // namespace detail

// f(G). Vertex v becomes c, t0..t2 and x/y/z for the index pairs 01, 12, 02
// (labels "c[v]", "t1[v]", "x01[v]", ...). Gadget subscripts are mod 3; edge
// labels come from rot.
inline GadgetOutput planar_gadget(const Graph& g, const RotationSystem& rot) {
  require_connected(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<Vertex>(v)) > 3)
      throw ValidationError("vertex " + std::to_string(v) + " has degree above 3");
  detail::check_rotation(g, rot);

  constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {1, 2}, {0, 2}}};
  auto pair_name = [](int i, int j) {
    i = ((i % 3) + 3) % 3;
    j = ((j % 3) + 3) % 3;
    return std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
  };

  detail::GadgetBuilder b;
  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
    const auto v = static_cast<Vertex>(vi);
    const Vertex c = b.add(detail::tag("c", v));
    std::array<Vertex, 3> t{};
    for (int i = 0; i < 3; ++i) t[static_cast<std::size_t>(i)] = b.add(detail::tag("t" + std::to_string(i), v));
    std::map<std::string, std::array<Vertex, 3>> xyz;
    for (auto [i, j] : kPairs) {
      const std::string p = pair_name(i, j);
      const Vertex x = b.add(detail::tag("x" + p, v));
      const Vertex y = b.add(detail::tag("y" + p, v));
      const Vertex z = b.add(detail::tag("z" + p, v));
      b.connect(x, c);
      b.connect(x, y);
      b.connect(y, z);
      xyz[p] = {x, y, z};
    }
    for (int i = 0; i < 3; ++i) {
      const Vertex ti = t[static_cast<std::size_t>(i)];
      b.connect(ti, c);
      for (const std::string& p : {pair_name(i, i + 1), pair_name(i - 1, i)}) {
        b.connect(ti, xyz[p][0]);
        b.connect(ti, xyz[p][1]);
      }
    }
  }
  auto& ids = b.output().ids;
  auto at = [&](const std::string& role, Vertex v) { return ids.at(detail::tag(role, v)); };
  for (const Edge& e : g.edges()) {
    const auto& ou = rot.order[static_cast<std::size_t>(e.u)];
    const auto& ov = rot.order[static_cast<std::size_t>(e.v)];
    const int i = static_cast<int>(std::find(ou.begin(), ou.end(), e.v) - ou.begin());
    const int j = static_cast<int>(std::find(ov.begin(), ov.end(), e.u) - ov.begin());
    b.connect(at("t" + std::to_string(i % 3), e.u), at("t" + std::to_string(j % 3), e.v));
    b.connect(at("y" + pair_name(i, i + 1), e.u), at("y" + pair_name(j - 1, j), e.v));
    b.connect(at("y" + pair_name(i - 1, i), e.u), at("y" + pair_name(j + 1, j), e.v));
  }
  return b.finish();
}

// G*: originals keep their ids ("v[i]"); vertex v gains the path v - x_v - y_v
// with labels "x[v]", "y[v]".
inline GadgetOutput pendant_gadget(const Graph& g) {
  detail::require_triangle_free(g);
  detail::GadgetBuilder b;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) b.add(detail::tag("v", static_cast<Vertex>(v)));
  for (const Edge& e : g.edges()) b.connect(e.u, e.v);
  for (std::size_t v = 0; v < n; ++v) {
    const auto vv = static_cast<Vertex>(v);
    const Vertex x = b.add(detail::tag("x", vv));
    const Vertex y = b.add(detail::tag("y", vv));
    b.connect(vv, x);
    b.connect(x, y);
  }
  auto out = b.finish();
  if (has_triangle(out.graph)) throw std::logic_error("pendant gadget produced a triangle");
  return out;
}

// H_G: originals "v[i]" plus a, b, c, d with edges ab, cd, and E' = {bv, cv}
// for every original v (returned in `auxiliary`).
inline GadgetOutput apex_pair_gadget(const Graph& g) {
  detail::require_triangle_free(g);
  detail::GadgetBuilder b;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) b.add(detail::tag("v", static_cast<Vertex>(v)));
  for (const Edge& e : g.edges()) b.connect(e.u, e.v);
  const Vertex a = b.add("a"), bb = b.add("b"), c = b.add("c"), d = b.add("d");
  b.connect(a, bb);
  b.connect(c, d);
  EdgeSet aux;
  for (std::size_t v = 0; v < n; ++v) {
    const auto vv = static_cast<Vertex>(v);
    b.connect(bb, vv);
    b.connect(c, vv);
    aux.emplace_back(bb, vv);
    aux.emplace_back(c, vv);
  }
  auto out = b.finish();
  out.auxiliary = make_edge_set(std::move(aux));
  return out;
}

// G': originals "v[i]" plus "u" adjacent to all of them.
inline GadgetOutput universal_vertex_gadget(const Graph& g) {
  detail::GadgetBuilder b;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v) b.add(detail::tag("v", static_cast<Vertex>(v)));
  for (const Edge& e : g.edges()) b.connect(e.u, e.v);
  const Vertex u = b.add("u");
  for (std::size_t v = 0; v < n; ++v) b.connect(u, static_cast<Vertex>(v));
  return b.finish();
}

// Turns a line geodetic set q of an apex-pair gadget into one avoiding E'.
// First drops E' edges that cover no original edge outside the set, then
// swaps each remaining E' edge for the smallest original edge it covers
// whose swap keeps the set line geodetic. Never grows the set.
inline EdgeSet normalize_line_geodetic(const GadgetOutput& h, const EdgeSet& q) {
  const PropertyModel pm(h.graph, Property::line_geodetic);
  const CoverageModel& model = pm.coverage();
  const EdgeSet& edges = pm.edges();
  const std::size_t m = edges.size();

  std::vector<int> items = pm.items_of(make_edge_set(q));
  if (!model.covers(items)) throw ValidationError("edge set is not line geodetic");

  std::vector<char> in_aux(m, 0), original(m, 1);
  for (const Edge& e : h.auxiliary)
    in_aux[static_cast<std::size_t>(pm.items_of(EdgeSet{e}).front())] = 1;
  for (const Edge& e : {Edge(h.id("a"), h.id("b")), Edge(h.id("c"), h.id("d"))})
    original[static_cast<std::size_t>(pm.items_of(EdgeSet{e}).front())] = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (in_aux[i]) original[i] = 0;

  auto sorted = [](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  auto without = [](const std::vector<int>& s, int x) {
    std::vector<int> r;
    for (int y : s)
      if (y != x) r.push_back(y);
    return r;
  };
  // Original edges outside s that lie between e and another member of s.
  auto covered_by = [&](const std::vector<int>& s, int e) {
    Bitset cov(m);
    for (int f : s)
      if (f != e) cov |= model.pair(static_cast<std::size_t>(e), static_cast<std::size_t>(f));
    std::vector<int> out;
    for (std::size_t i = 0; i < m; ++i)
      if (cov.test(i) && original[i] && std::find(s.begin(), s.end(), static_cast<int>(i)) == s.end())
        out.push_back(static_cast<int>(i));
    return out;
  };

  items = sorted(std::move(items));
  for (bool changed = true; changed;) {
    changed = false;
    for (int e : items)
      if (in_aux[static_cast<std::size_t>(e)] && covered_by(items, e).empty()) {
        auto next = without(items, e);
        if (!model.covers(next)) continue;
        items = std::move(next);
        changed = true;
        break;
      }
  }
  for (;;) {
    auto it = std::find_if(items.begin(), items.end(),
                           [&](int e) { return in_aux[static_cast<std::size_t>(e)] != 0; });
    if (it == items.end()) break;
    const int e = *it;
    bool swapped = false;
    for (int f : covered_by(items, e)) {
      auto next = without(items, e);
      next.push_back(f);
      next = sorted(std::move(next));
      if (model.covers(next)) {
        items = std::move(next);
        swapped = true;
        break;
      }
    }
    if (!swapped) {
      auto next = without(items, e);
      if (!model.covers(next))
        throw StructuralError(edges[static_cast<std::size_t>(e)].u,
                              "no replacement keeps the set line geodetic for edge " +
                                  to_string(edges[static_cast<std::size_t>(e)]));
      items = std::move(next);
    }
  }
  return std::get<EdgeSet>(pm.to_set(items));
}

}  // namespace geodetic

#endif  // GEODETIC_GADGETS_HPP_
