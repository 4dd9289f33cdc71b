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

#ifndef CHROMA_TWINS_HPP
#define CHROMA_TWINS_HPP

#include <map>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Substitutes a clique of size weights[u] for every base vertex u. Bags are
/// numbered consecutively in base-vertex order; `bag_of` (optional) receives
/// the base vertex of every realized vertex.
inline Graph blowup_graph(const Graph& base, std::span<const int> weights,
                          std::vector<int>* bag_of = nullptr) {
  if (static_cast<int>(weights.size()) != base.size())
    throw InvalidInput("weight vector does not match base size");
  std::vector<int> owner;
  for (int u = 0; u < base.size(); ++u) {
    if (weights[u] < 0) throw InvalidInput("negative weight");
    for (int j = 0; j < weights[u]; ++j) owner.push_back(u);
  }
  const int n = static_cast<int>(owner.size());
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (owner[a] == owner[b] || base.adjacent(owner[a], owner[b]))
        g.add_edge(a, b);
  if (!base.labels().empty()) {
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back(base.label(owner[a]));
    g.set_labels(std::move(labels));
  }
  if (bag_of) *bag_of = std::move(owner);
  return g;
}

struct TwinQuotient {
  Graph base;
  std::vector<int> weights;   // class sizes, one per base vertex
  std::vector<int> class_of;  // original vertex -> base vertex

  /// Members of each class in ascending order.
  std::vector<std::vector<int>> members() const {
    std::vector<std::vector<int>> out(base.size());
    for (int v = 0; v < static_cast<int>(class_of.size()); ++v)
      out[class_of[v]].push_back(v);
    return out;
  }
};

/// Contracts maximal classes of vertices with equal closed neighbourhoods.
/// Classes are numbered by their smallest member.
inline TwinQuotient quotient_by_true_twins(const Graph& g) {
  const int n = g.size();
  TwinQuotient q;
  q.class_of.assign(n, -1);
  std::map<std::vector<std::uint64_t>, int> index;
  std::vector<int> rep;
  for (int v = 0; v < n; ++v) {
    auto nb = g.closed_neighbors(v);
    std::vector<std::uint64_t> key(nb.words().begin(), nb.words().end());
    auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(rep.size()));
    if (fresh) {
      rep.push_back(v);
      q.weights.push_back(0);
    }
    q.class_of[v] = it->second;
    ++q.weights[it->second];
  }
  q.base = induced_subgraph(g, std::span<const int>(rep));
  if (!g.labels().empty()) {
    std::vector<std::string> labels(rep.size());
    for (int v = 0; v < n; ++v) {
      auto& l = labels[q.class_of[v]];
      if (!l.empty()) l += ",";
      l += g.label(v);
    }
    q.base.set_labels(std::move(labels));
  }
  return q;
}

}  // namespace chroma

#endif  // CHROMA_TWINS_HPP
