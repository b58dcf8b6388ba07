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

#ifndef GEODETIC_EXACT_HPP_
#define GEODETIC_EXACT_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geodetic/biconnected.hpp"
#include "geodetic/bitset.hpp"
#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/properties.hpp"

namespace geodetic {

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

struct ExactOptions {
  // Search nodes (partial subsets extended by one item) before giving up with
  // ResourceExhausted. Machine independent, unlike a timeout.
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Pin members that belong to every solution before enumerating.
  bool pin_mandatory = true;
};

struct SolveReport {
  std::string algorithm;
  // Minimum cardinality for exact methods; the size of the returned set for
  // approximations.
  std::size_t optimum_size = 0;
  VertexOrEdgeSet witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};

  const VertexSet& vertices() const { return std::get<VertexSet>(witness); }
  const EdgeSet& edges() const { return std::get<EdgeSet>(witness); }
};

namespace detail {

// Ascending-cardinality enumeration of candidate subsets, lexicographic within
// a cardinality, with coverage maintained incrementally along the DFS.
// `base` items take part in coverage but are not counted or returned (cut
// vertices in the block-wise solver); `pinned` items are counted.
class CoverSearch {
 public:
  CoverSearch(const CoverageModel& model, std::vector<int> base, std::vector<int> pinned,
              std::vector<int> candidates, std::uint64_t budget)
      : model_(model),
        fixed_(std::move(base)),
        candidates_(std::move(candidates)),
        budget_(budget),
        full_(model.target_count) {
    fixed_.insert(fixed_.end(), pinned.begin(), pinned.end());
    full_.set_all();
    root_ = model_.coverage(fixed_);
  }

  std::uint64_t nodes() const { return nodes_; }

  // Smallest set of candidates completing the cover; nullopt if even all
  // candidates fail.
  std::optional<std::vector<int>> minimum() {
    for (std::size_t k = 0; k <= candidates_.size(); ++k) {
      std::optional<std::vector<int>> found;
      run(k, [&](const std::vector<int>& chosen) {
        found = chosen;
        return false;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  // Calls f(chosen) for every k-subset of candidates that completes the
  // cover; f returns false to stop.
  template <typename F>
  void run(std::size_t k, F&& f) {
    if (k > candidates_.size()) return;
    chosen_.assign(fixed_.begin(), fixed_.end());
    stack_.assign(k + 1, Bitset(model_.target_count));
    stack_[0] = root_;
    picked_.clear();
    dfs(0, 0, k, f);
  }

 private:
  template <typename F>
  bool dfs(std::size_t depth, std::size_t start, std::size_t k, F& f) {
    if (depth == k) {
      if (stack_[depth].contains(full_)) return f(picked_);
      return true;
    }
    const std::size_t last = candidates_.size() - (k - depth);
    for (std::size_t i = start; i <= last; ++i) {
      if (++nodes_ > budget_) throw ResourceExhausted(budget_);
      const int c = candidates_[i];
      const auto cc = static_cast<std::size_t>(c);
      Bitset& cov = stack_[depth + 1];
      cov = stack_[depth];
      cov |= model_.single[cc];
      if (model_.has_pairs())
        for (int x : chosen_) cov |= model_.pair(static_cast<std::size_t>(x), cc);
      chosen_.push_back(c);
      picked_.push_back(c);
      const bool go_on = dfs(depth + 1, i + 1, k, f);
      chosen_.pop_back();
      picked_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const CoverageModel& model_;
  std::vector<int> fixed_;
  std::vector<int> candidates_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Bitset full_;
  Bitset root_;
  std::vector<Bitset> stack_;
  std::vector<int> chosen_;
  std::vector<int> picked_;
};

template <typename F>
auto timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace detail

// Minimum geodetic set by exhaustive search. Simplicial vertices (degree-1
// vertices included) lie strictly inside no shortest path, so they are pinned
// before enumeration when opts.pin_mandatory is set.
inline SolveReport min_geodetic_set(const Graph& g, const ExactOptions& opts = {}) {
  require_connected(g);
  return detail::timed([&] {
    SolveReport r;
    r.algorithm = "exact";
    const std::size_t n = g.vertex_count();
    if (n == 0) {
      r.witness = VertexSet{};
      return r;
    }
    const CoverageModel model = geodetic_model(g, DistanceOracle(g));
    std::vector<int> pinned, candidates;
    for (std::size_t v = 0; v < n; ++v) {
      if (opts.pin_mandatory && is_simplicial(g, static_cast<Vertex>(v)))
        pinned.push_back(static_cast<int>(v));
      else
        candidates.push_back(static_cast<int>(v));
    }
    detail::CoverSearch search(model, {}, pinned, candidates, opts.node_budget);
    auto extra = search.minimum();
    // V(g) itself is always geodetic, so the search cannot come back empty.
    std::vector<Vertex> members(pinned.begin(), pinned.end());
    members.insert(members.end(), extra->begin(), extra->end());
    r.witness = make_vertex_set(std::move(members));
    r.optimum_size = r.vertices().size();
    r.nodes_explored = search.nodes();
    return r;
  });
}

// Block-wise minimum geodetic set. For each biconnected component F with cut
// vertices C_F, finds a minimum X_F of non-cut vertices of F such that
// X_F ∪ C_F is geodetic in F; returns the union of the X_F.
inline SolveReport min_geodetic_decomposed(const Graph& g, const ExactOptions& opts = {}) {
  require_connected(g);
  return detail::timed([&] {
    SolveReport r;
    r.algorithm = "decomposed";
    const auto dec = biconnected_decomposition(g);
    std::vector<char> is_cut(g.vertex_count(), 0);
    for (Vertex c : dec.cut_vertices) is_cut[static_cast<std::size_t>(c)] = 1;

    std::vector<Vertex> members;
    for (const auto& comp : dec.components) {
      const Graph block = induced_subgraph(g, comp);
      const CoverageModel model = geodetic_model(block, DistanceOracle(block));
      std::vector<int> base, pinned, candidates;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const int local = static_cast<int>(i);
        if (is_cut[static_cast<std::size_t>(comp[i])])
          base.push_back(local);
        else if (opts.pin_mandatory && is_simplicial(block, local))
          pinned.push_back(local);
        else
          candidates.push_back(local);
      }
      detail::CoverSearch search(model, base, pinned, candidates,
                                 opts.node_budget - r.nodes_explored);
      auto extra = search.minimum();
      r.nodes_explored += search.nodes();
      if (!extra)
        throw StructuralError(comp.front(), "block is not covered by all of its vertices");
      for (int local : pinned) members.push_back(comp[static_cast<std::size_t>(local)]);
      for (int local : *extra) members.push_back(comp[static_cast<std::size_t>(local)]);
    }
    r.witness = make_vertex_set(std::move(members));
    r.optimum_size = r.vertices().size();
    return r;
  });
}

// Minimum set for one of the auxiliary properties (or geodetic), by
// ascending-size enumeration over PropertyModel. Items that the union of all
// other items cannot cover are pinned.
inline SolveReport min_property_set(const Graph& g, Property p, const ExactOptions& opts = {}) {
  return detail::timed([&] {
    SolveReport r;
    r.algorithm = "exact:" + std::string(name(p));
    const PropertyModel pm(g, p);
    const CoverageModel& model = pm.coverage();
    std::vector<int> all(model.item_count);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

    std::vector<int> pinned, candidates;
    for (std::size_t i = 0; i < model.item_count; ++i) {
      bool forced = false;
      if (opts.pin_mandatory) {
        std::vector<int> rest;
        rest.reserve(all.size() - 1);
        for (int j : all)
          if (j != static_cast<int>(i)) rest.push_back(j);
        forced = !model.coverage(rest).test(i);
      }
      (forced ? pinned : candidates).push_back(static_cast<int>(i));
    }
    detail::CoverSearch search(model, {}, pinned, candidates, opts.node_budget);
    auto extra = search.minimum();
    if (!extra) throw ValidationError("no set satisfies " + std::string(name(p)));
    std::vector<int> items = pinned;
    items.insert(items.end(), extra->begin(), extra->end());
    r.witness = pm.to_set(items);
    r.optimum_size = items.size();
    r.nodes_explored = search.nodes();
    return r;
  });
}

// Every geodetic set of exactly `size` vertices, in lexicographic order. No
// pinning: this is the exhaustive reference used by lower-bound checks.
inline std::vector<VertexSet> geodetic_sets_of_size(const Graph& g, std::size_t size,
                                                    const ExactOptions& opts = {}) {
  require_connected(g);
  const CoverageModel model = geodetic_model(g, DistanceOracle(g));
  std::vector<int> candidates(g.vertex_count());
  for (std::size_t v = 0; v < candidates.size(); ++v) candidates[v] = static_cast<int>(v);
  detail::CoverSearch search(model, {}, {}, candidates, opts.node_budget);
  std::vector<VertexSet> out;
  search.run(size, [&](const std::vector<int>& chosen) {
    out.emplace_back(chosen.begin(), chosen.end());
    return true;
  });
  return out;
}

}  // namespace geodetic

#endif  // GEODETIC_EXACT_HPP_
