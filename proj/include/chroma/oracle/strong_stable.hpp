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

#ifndef CHROMA_ORACLE_STRONG_STABLE_HPP
#define CHROMA_ORACLE_STRONG_STABLE_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/oracle/clique.hpp"
#include "chroma/oracle/cover.hpp"

namespace chroma {

/// Stable set of g meeting every maximum clique; smallest size first, then
/// lexicographic. Requires n <= 64 so that maximum cliques are enumerable.
inline std::optional<std::vector<int>> find_strong_stable_set(
    const Graph& g, SearchBudget budget = SearchBudget::from_env()) {
  if (g.size() > kEnumerateCliquesUpTo)
    throw SizeGuard("find_strong_stable_set needs at most 64 vertices");
  if (g.size() == 0) return std::nullopt;
  const auto rep = clique_number(g, budget);
  const int n = g.size();
  const int m = static_cast<int>(rep.all_maximum_cliques.size());
  // hits[v]: the maximum cliques containing v.
  std::vector<VertexSet> hits(n, VertexSet(m));
  for (int c = 0; c < m; ++c)
    for (int v : rep.all_maximum_cliques[c]) hits[v].set(c);
  VertexSet all_cliques(m);
  for (int c = 0; c < m; ++c) all_cliques.set(c);

  NodeCounter counter(budget, "find_strong_stable_set");
  std::vector<int> chosen;
  std::function<bool(int, int, VertexSet, const VertexSet&)> rec =
      [&](int next, int left, VertexSet unhit, const VertexSet& blocked) -> bool {
    counter.tick();
    if (unhit.empty()) return true;
    if (left == 0) return false;
    // Every unhit clique still needs an unblocked vertex at or after `next`.
    VertexSet reachable(m);
    for (int v = next; v < n; ++v)
      if (!blocked.test(v)) reachable |= hits[v];
    if (!unhit.subset_of(reachable)) return false;
    for (int v = next; v < n; ++v) {
      if (blocked.test(v) || !hits[v].intersects(unhit)) continue;
      chosen.push_back(v);
      VertexSet u2 = unhit;
      u2.subtract(hits[v]);
      if (rec(v + 1, left - 1, u2, blocked | g.closed_neighbors(v))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= n; ++size) {
    chosen.clear();
    if (rec(0, size, all_cliques, VertexSet(n))) return chosen;
  }
  return std::nullopt;
}

/// Every stable set of base inside the support that meets each maximum
/// weight clique, ordered by size then lexicographically.
inline std::vector<Mask> strong_stable_sets_spec(const Graph& base, std::span<const int> w) {
  const auto nb = neighbor_masks(base);
  const auto mc = max_weight_clique(base, w);
  std::vector<Mask> out;
  if (mc.weight == 0) return out;
  const Mask support = support_mask(w);
  const int n = base.size();
  std::function<void(int, Mask, int)> rec = [&](int next, Mask s, int left) {
    if (left == 0) {
      for (Mask c : mc.maximum)
        if (!(c & s)) return;
      out.push_back(s);
      return;
    }
    for (int v = next; v < n; ++v) {
      Mask bit = Mask{1} << v;
      if (!(support & bit) || (nb[v] & s)) continue;
      rec(v + 1, s | bit, left - 1);
    }
  };
  for (int size = 1; size <= n; ++size) rec(0, 0, size);
  return out;
}

inline std::optional<Mask> find_strong_stable_set_spec(const Graph& base,
                                                       std::span<const int> w) {
  auto all = strong_stable_sets_spec(base, w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

inline bool is_strong_stable_spec(const Graph& base, std::span<const int> w, Mask s) {
  if (!mask_is_stable(base, s) || (s & ~support_mask(w))) return false;
  for (Mask c : max_weight_clique(base, w).maximum)
    if (!(c & s)) return false;
  return true;
}

}  // namespace chroma

#endif  // CHROMA_ORACLE_STRONG_STABLE_HPP
