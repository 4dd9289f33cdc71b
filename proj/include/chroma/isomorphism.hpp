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

#ifndef CHROMA_ISOMORPHISM_HPP
#define CHROMA_ISOMORPHISM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

inline constexpr int kMaxIsomorphismVertices = 12;

namespace detail {

// Maps small[0..] into large in order, trying large vertices ascending, so the
// first complete map is the lexicographically smallest. With `bijective` the
// degrees must agree; `visit` returns true to stop the enumeration.
inline void embed_search(const Graph& small, const Graph& large, bool bijective,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  const int k = small.size();
  const int n = large.size();
  if (k > n || (bijective && k != n)) return;
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int i) {
    if (stop) return;
    if (i == k) {
      stop = visit(map);
      return;
    }
    for (int c = 0; c < n && !stop; ++c) {
      if (used[c]) continue;
      if (bijective && small.degree(i) != large.degree(c)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = small.adjacent(i, j) == large.adjacent(c, map[j]);
      if (!ok) continue;
      map[i] = c;
      used[c] = 1;
      rec(i + 1);
      used[c] = 0;
      map[i] = -1;
    }
  };
  rec(0);
}

inline void guard_size(const Graph& g) {
  if (g.size() > kMaxIsomorphismVertices)
    throw SizeGuard("isomorphism test limited to " +
                    std::to_string(kMaxIsomorphismVertices) + " vertices");
}

}  // namespace detail

/// Edge-preserving bijection g1 -> g2, if any. Both graphs must have at most
/// 12 vertices.
inline std::optional<std::vector<int>> is_isomorphic_small(const Graph& g1,
                                                            const Graph& g2) {
  detail::guard_size(g1);
  detail::guard_size(g2);
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  std::optional<std::vector<int>> out;
  detail::embed_search(g1, g2, true, [&](const std::vector<int>& m) {
    out = m;
    return true;
  });
  return out;
}

/// Every isomorphism g1 -> g2 passing `accept` (default: all), in
/// lexicographic order.
inline std::vector<std::vector<int>> all_isomorphisms(
    const Graph& g1, const Graph& g2,
    const std::function<bool(const std::vector<int>&)>& accept = nullptr) {
  detail::guard_size(g1);
  detail::guard_size(g2);
  std::vector<std::vector<int>> out;
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return out;
  detail::embed_search(g1, g2, true, [&](const std::vector<int>& m) {
    if (!accept || accept(m)) out.push_back(m);
    return false;
  });
  return out;
}

inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  return all_isomorphisms(g, g);
}

/// Lexicographically first injective map small -> large under which small is
/// an induced subgraph of large.
inline std::optional<std::vector<int>> find_induced_embedding(const Graph& small,
                                                               const Graph& large) {
  detail::guard_size(small);
  detail::guard_size(large);
  std::optional<std::vector<int>> out;
  detail::embed_search(small, large, false, [&](const std::vector<int>& m) {
    out = m;
    return true;
  });
  return out;
}

}  // namespace chroma

#endif  // CHROMA_ISOMORPHISM_HPP
