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

#ifndef CHROMA_ORACLE_COVER_HPP
#define CHROMA_ORACLE_COVER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/oracle/clique.hpp"

namespace chroma {

/// Subset of a base graph with at most 16 vertices.
using Mask = std::uint32_t;

inline constexpr int kMaxCoverBase = 16;

inline int mask_size(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_vertices(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

inline Mask mask_of(std::span<const int> vs) {
  Mask m = 0;
  for (int v : vs) m |= Mask{1} << v;
  return m;
}

inline Mask mask_of(std::initializer_list<int> vs) {
  return mask_of(std::span<const int>(vs.begin(), vs.size()));
}

inline int mask_weight(Mask m, std::span<const int> w) {
  int s = 0;
  for (; m; m &= m - 1) s += w[std::countr_zero(m)];
  return s;
}

/// Vertices of positive weight.
inline Mask support_mask(std::span<const int> w) {
  Mask m = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0) m |= Mask{1} << i;
  return m;
}

inline std::vector<Mask> neighbor_masks(const Graph& base) {
  if (base.size() > kMaxCoverBase)
    throw SizeGuard("weighted base limited to " + std::to_string(kMaxCoverBase) +
                    " vertices");
  std::vector<Mask> nb(base.size(), 0);
  for (auto [u, v] : base.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  return nb;
}

inline bool mask_is_stable(const Graph& base, Mask m) {
  auto nb = neighbor_masks(base);
  for (Mask r = m; r; r &= r - 1)
    if (nb[std::countr_zero(r)] & m) return false;
  return true;
}

inline bool mask_is_clique(const Graph& base, Mask m) {
  auto nb = neighbor_masks(base);
  for (Mask r = m; r; r &= r - 1) {
    int v = std::countr_zero(r);
    if ((m & ~(Mask{1} << v)) & ~nb[v]) return false;
  }
  return true;
}

namespace detail {

inline void bk_masks(const std::vector<Mask>& adj, Mask r, Mask p, Mask x,
                     std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = std::countr_zero(p | x);
  for (Mask c = p & ~adj[pivot]; c; c &= c - 1) {
    int v = std::countr_zero(c);
    Mask bit = Mask{1} << v;
    bk_masks(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace detail

/// Maximal cliques of base[within], ascending.
inline std::vector<Mask> maximal_cliques(const Graph& base, Mask within) {
  auto nb = neighbor_masks(base);
  std::vector<Mask> out;
  if (within) detail::bk_masks(nb, 0, within, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Maximal stable sets of base[within], ascending.
inline std::vector<Mask> maximal_stable_sets(const Graph& base, Mask within) {
  auto nb = neighbor_masks(base);
  const Mask full = base.size() == 32 ? ~Mask{0} : (Mask{1} << base.size()) - 1;
  for (auto& m : nb) m = ~m & full;
  for (int v = 0; v < base.size(); ++v) nb[v] &= ~(Mask{1} << v);
  std::vector<Mask> out;
  if (within) detail::bk_masks(nb, 0, within, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

struct WeightedClique {
  int weight = 0;
  std::vector<Mask> maximum;  // maximal cliques of the support attaining it
};

/// Clique number of the blowup: the heaviest maximal clique of the support.
inline WeightedClique max_weight_clique(const Graph& base, std::span<const int> w) {
  WeightedClique r;
  for (Mask c : maximal_cliques(base, support_mask(w))) {
    int s = mask_weight(c, w);
    if (s > r.weight) {
      r.weight = s;
      r.maximum.clear();
    }
    if (s == r.weight) r.maximum.push_back(c);
  }
  return r;
}

/// Stability number of every subset of `within`. Entry u describes the
/// subset whose j-th bit selects the j-th vertex of `within`.
inline std::vector<std::uint8_t> alpha_table(const Graph& base, Mask within) {
  auto nb = neighbor_masks(base);
  const auto verts = mask_vertices(within);
  const int m = static_cast<int>(verts.size());
  std::vector<Mask> local_nb(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (nb[verts[i]] >> verts[j] & 1) local_nb[i] |= Mask{1} << j;
  std::vector<std::uint8_t> a(std::size_t{1} << m, 0);
  for (Mask u = 1; u < (Mask{1} << m); ++u) {
    int v = std::countr_zero(u);
    Mask without = u & ~(Mask{1} << v);
    a[u] = std::max<std::uint8_t>(a[without], 1 + a[without & ~local_nb[v]]);
  }
  return a;
}

/// A multiset of stable sets of `base` covering every vertex i at least
/// demands[i] times.
struct StableSetCover {
  Graph base;
  std::vector<int> demands;
  std::vector<std::pair<Mask, int>> sets;  // (stable set, multiplicity), ascending
  int size = 0;

  /// One mask per color class.
  std::vector<Mask> classes() const {
    std::vector<Mask> out;
    for (auto [m, k] : sets)
      for (int i = 0; i < k; ++i) out.push_back(m);
    return out;
  }
};

inline StableSetCover make_cover(const Graph& base, std::span<const int> w,
                                 const std::vector<Mask>& classes) {
  StableSetCover c;
  c.base = base;
  c.demands.assign(w.begin(), w.end());
  std::map<Mask, int> count;
  for (Mask m : classes) ++count[m];
  c.sets.assign(count.begin(), count.end());
  c.size = static_cast<int>(classes.size());
  return c;
}

inline bool verify_cover(const StableSetCover& c) {
  if (c.base.size() > kMaxCoverBase ||
      static_cast<int>(c.demands.size()) != c.base.size())
    return false;
  std::vector<int> got(c.base.size(), 0);
  int total = 0;
  for (auto [m, k] : c.sets) {
    if (k < 0 || !mask_is_stable(c.base, m)) return false;
    for (int v : mask_vertices(m)) got[v] += k;
    total += k;
  }
  for (int i = 0; i < c.base.size(); ++i)
    if (got[i] < c.demands[i]) return false;
  return total == c.size;
}

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const Graph& base, std::span<const int> w, SearchBudget b)
      : w_(w.begin(), w.end()),
        support_(support_mask(w)),
        counter_(b, "blowup_chromatic_exact") {
    stables_ = maximal_stable_sets(base, support_);
    const auto verts = mask_vertices(support_);
    const int m = static_cast<int>(verts.size());
    auto alpha = alpha_table(base, support_);
    // Inclusion-maximal subsets per stability level give every useful bound.
    std::vector<std::vector<Mask>> level(m + 1);
    for (Mask u = 1; u < (Mask{1} << m); ++u) {
      bool maximal = true;
      for (int j = 0; j < m && maximal; ++j)
        if (!(u >> j & 1) && alpha[u | (Mask{1} << j)] == alpha[u]) maximal = false;
      if (maximal) level[alpha[u]].push_back(u);
    }
    for (int a = 1; a <= m; ++a)
      for (Mask u : level[a]) {
        Mask g = 0;
        for (int j = 0; j < m; ++j)
          if (u >> j & 1) g |= Mask{1} << verts[j];
        bounds_.push_back({g, a});
      }
  }

  int lower_bound(const std::vector<int>& r) const {
    int lb = 0;
    for (auto [u, a] : bounds_) {
      int s = mask_weight(u, r);
      lb = std::max(lb, (s + a - 1) / a);
    }
    return lb;
  }

  bool solve(int k, std::vector<Mask>& out) {
    failed_.clear();
    std::vector<int> r = w_;
    out.clear();
    return rec(r, k, out);
  }

  const std::vector<int>& weights() const { return w_; }

 private:
  std::string key(const std::vector<int>& r, int k) const {
    std::string s;
    s.reserve(r.size() * 2 + 2);
    for (int x : r) {
      s.push_back(static_cast<char>(x & 0xff));
      s.push_back(static_cast<char>(x >> 8));
    }
    s.push_back(static_cast<char>(k & 0xff));
    s.push_back(static_cast<char>(k >> 8));
    return s;
  }

  bool rec(std::vector<int>& r, int k, std::vector<Mask>& out) {
    counter_.tick();
    int v = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      if (r[i] > 0 && (v < 0 || r[i] > r[v])) v = i;
    if (v < 0) return true;
    if (k <= 0 || lower_bound(r) > k) return false;
    std::string id = key(r, k);
    if (failed_.count(id)) return false;
    const Mask positive = support_mask(r);
    std::vector<Mask> options;
    for (Mask s : stables_)
      if (s >> v & 1) options.push_back(s & positive);
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    std::vector<Mask> kept;
    for (Mask a : options) {
      bool dominated = false;
      for (Mask b : options)
        if (a != b && (a & b) == a) dominated = true;
      if (!dominated) kept.push_back(a);
    }
    // Larger classes first, then ascending mask.
    std::stable_sort(kept.begin(), kept.end(), [&](Mask a, Mask b) {
      return mask_weight(a, r) > mask_weight(b, r);
    });
    for (Mask s : kept) {
      for (Mask t = s; t; t &= t - 1) --r[std::countr_zero(t)];
      out.push_back(s);
      if (rec(r, k - 1, out)) return true;
      out.pop_back();
      for (Mask t = s; t; t &= t - 1) ++r[std::countr_zero(t)];
    }
    failed_.insert(std::move(id));
    return false;
  }

  std::vector<int> w_;
  Mask support_;
  std::vector<Mask> stables_;
  std::vector<std::pair<Mask, int>> bounds_;
  std::unordered_set<std::string> failed_;
  NodeCounter counter_;
};

}  // namespace detail

/// Largest ratio ceil(w(U) / alpha(U)) over subsets U of the support.
inline int blowup_lower_bound(const Graph& base, std::span<const int> w) {
  detail::CoverSearch s(base, w, SearchBudget{});
  return s.lower_bound(std::vector<int>(w.begin(), w.end()));
}

/// Minimum cover within k classes, if one exists.
inline std::optional<StableSetCover> blowup_cover_within(
    const Graph& base, std::span<const int> w, int k,
    SearchBudget budget = SearchBudget::from_env()) {
  for (int x : w)
    if (x < 0) throw InvalidInput("negative weight");
  detail::CoverSearch s(base, w, budget);
  std::vector<Mask> classes;
  for (int j = s.lower_bound(s.weights()); j <= k; ++j)
    if (s.solve(j, classes)) return make_cover(base, w, classes);
  return std::nullopt;
}

/// Exact chromatic number of the blowup of `base` by `w`, with an optimal
/// cover. Each class covers only vertices still in demand, so coverage is
/// exact.
inline StableSetCover blowup_chromatic_exact(const Graph& base, std::span<const int> w,
                                             SearchBudget budget = SearchBudget::from_env()) {
  if (base.size() > kMaxCoverBase)
    throw SizeGuard("blowup_chromatic_exact: base limited to " +
                    std::to_string(kMaxCoverBase) + " vertices");
  if (static_cast<int>(w.size()) != base.size())
    throw InvalidInput("weight vector length differs from base size");
  for (int x : w)
    if (x < 0) throw InvalidInput("negative weight");
  detail::CoverSearch s(base, w, budget);
  std::vector<Mask> classes;
  for (int k = s.lower_bound(s.weights());; ++k)
    if (s.solve(k, classes)) return make_cover(base, w, classes);
}

}  // namespace chroma

#endif  // CHROMA_ORACLE_COVER_HPP
