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

#ifndef CHROMA_ORACLE_MATCHING_HPP
#define CHROMA_ORACLE_MATCHING_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Left vertices are 0..left-1, right vertices 0..right-1; edges are
/// (left, right) pairs.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;
};

struct MatchingCertificate {
  std::vector<std::pair<int, int>> matching;  // (left, right), sorted
  std::vector<int> cover_left;                // sorted
  std::vector<int> cover_right;               // sorted

  int size() const { return static_cast<int>(matching.size()); }
  int cover_size() const {
    return static_cast<int>(cover_left.size() + cover_right.size());
  }
};

/// Hopcroft-Karp, then the König cover from alternating reachability: with Z
/// the vertices reachable from free left vertices along alternating paths,
/// the cover is (L \ Z) + (R & Z).
inline MatchingCertificate max_bipartite_matching(const BipartiteGraph& bg) {
  const int nl = bg.left, nr = bg.right;
  std::vector<std::vector<int>> adj(nl);
  for (auto [u, v] : bg.edges) {
    if (u < 0 || u >= nl || v < 0 || v >= nr)
      throw InvalidInput("bipartite edge endpoint out of range");
    adj[u].push_back(v);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_l(nl, -1), match_r(nr, -1), dist(nl);

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < nl; ++u) {
      dist[u] = match_l[u] < 0 ? 0 : kInf;
      if (match_l[u] < 0) q.push(u);
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  std::vector<std::size_t> it(nl);
  auto dfs = [&](auto&& self, int u) -> bool {
    for (; it[u] < adj[u].size(); ++it[u]) {
      int v = adj[u][it[u]];
      int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u = 0; u < nl; ++u)
      if (match_l[u] < 0) dfs(dfs, u);
  }

  std::vector<char> zl(nl, 0), zr(nr, 0);
  std::queue<int> q;
  for (int u = 0; u < nl; ++u)
    if (match_l[u] < 0) {
      zl[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (zr[v] || match_l[u] == v) continue;
      zr[v] = 1;
      int w = match_r[v];
      if (w >= 0 && !zl[w]) {
        zl[w] = 1;
        q.push(w);
      }
    }
  }

  MatchingCertificate cert;
  for (int u = 0; u < nl; ++u) {
    if (match_l[u] >= 0) cert.matching.emplace_back(u, match_l[u]);
    if (!zl[u]) cert.cover_left.push_back(u);
  }
  for (int v = 0; v < nr; ++v)
    if (zr[v]) cert.cover_right.push_back(v);
  if (cert.cover_size() != cert.size())
    throw InternalDefect("König cover size differs from matching size");
  return cert;
}

/// Matching disjoint, edges real, cover hits every edge, sizes equal.
inline bool verify_matching_certificate(const BipartiteGraph& bg,
                                        const MatchingCertificate& c) {
  std::vector<char> ul(bg.left, 0), ur(bg.right, 0), cl(bg.left, 0), cr(bg.right, 0);
  auto has_edge = [&](int u, int v) {
    return std::find(bg.edges.begin(), bg.edges.end(), std::make_pair(u, v)) !=
           bg.edges.end();
  };
  for (auto [u, v] : c.matching) {
    if (u < 0 || u >= bg.left || v < 0 || v >= bg.right) return false;
    if (ul[u] || ur[v] || !has_edge(u, v)) return false;
    ul[u] = ur[v] = 1;
  }
  for (int u : c.cover_left) {
    if (u < 0 || u >= bg.left) return false;
    cl[u] = 1;
  }
  for (int v : c.cover_right) {
    if (v < 0 || v >= bg.right) return false;
    cr[v] = 1;
  }
  for (auto [u, v] : bg.edges)
    if (!cl[u] && !cr[v]) return false;
  return c.size() == c.cover_size();
}

}  // namespace chroma

#endif  // CHROMA_ORACLE_MATCHING_HPP
