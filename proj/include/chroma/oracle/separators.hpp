// Copyright 2026 The chroma Authors
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

#ifndef CHROMA_ORACLE_SEPARATORS_HPP
#define CHROMA_ORACLE_SEPARATORS_HPP

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

struct CliqueCutset {
  std::vector<int> clique;                   // ascending
  std::vector<std::vector<int>> components;  // of g - clique
};

/// Cap on minimal separators generated per connected component.
inline constexpr int kMaxSeparatorsExamined = 20000;

namespace detail {

// N(C) for every component C of g - removed.
inline void close_separators(const Graph& g, const VertexSet& removed,
                             std::vector<VertexSet>& out) {
  for (const auto& comp : components(g, [&] {
         VertexSet keep = g.all();
         keep.subtract(removed);
         return keep;
       }())) {
    VertexSet nb(g.size());
    for (int v : comp) nb |= g.neighbors(v);
    nb &= removed;
    if (!nb.empty()) out.push_back(nb);
  }
}

inline bool set_is_clique(const Graph& g, const VertexSet& s) {
  return is_clique(g, s.to_vector());
}

// Minimal separators of a connected graph in generation order (the
// closure under S -> N(C), C a component of g - (S + N(x)), x in S).
inline std::optional<VertexSet> first_clique_separator(const Graph& g) {
  std::set<std::vector<int>> seen;
  std::deque<VertexSet> queue;
  auto offer = [&](const VertexSet& s) -> bool {
    auto key = s.to_vector();
    if (!seen.insert(key).second) return false;
    queue.push_back(s);
    return set_is_clique(g, s);
  };
  for (int v = 0; v < g.size(); ++v) {
    std::vector<VertexSet> seps;
    close_separators(g, g.closed_neighbors(v), seps);
    for (auto& s : seps)
      if (offer(s)) return s;
  }
  while (!queue.empty() && static_cast<int>(seen.size()) < kMaxSeparatorsExamined) {
    VertexSet s = queue.front();
    queue.pop_front();
    for (int x : s.to_vector()) {
      VertexSet removed = s | g.neighbors(x);
      std::vector<VertexSet> seps;
      close_separators(g, removed, seps);
      for (auto& t : seps)
        if (offer(t)) return t;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A clique whose removal increases the number of components, searched
/// among minimal separators of each component.
inline std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
  for (const auto& comp : components(g)) {
    if (comp.size() < 3) continue;
    Graph h = induced_subgraph(g, comp);
    auto sep = detail::first_clique_separator(h);
    if (!sep) continue;
    CliqueCutset out;
    for (int v : sep->to_vector()) out.clique.push_back(comp[v]);
    VertexSet keep = g.all();
    for (int v : out.clique) keep.reset(v);
    out.components = components(g, keep);
    return out;
  }
  return std::nullopt;
}

inline std::optional<int> find_universal_vertex(const Graph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == g.size() - 1) return v;
  return std::nullopt;
}

}  // namespace chroma

#endif  // CHROMA_ORACLE_SEPARATORS_HPP
