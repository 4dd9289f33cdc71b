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

#ifndef CHROMA_COLOR_BRACELET_HPP
#define CHROMA_COLOR_BRACELET_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chroma/color/classes.hpp"
#include "chroma/oracle/clique.hpp"
#include "chroma/oracle/coloring.hpp"
#include "chroma/oracle/matching.hpp"
#include "chroma/oracle/strong_stable.hpp"
#include "chroma/structure/bracelet.hpp"

namespace chroma {

/// How a bracelet coloring was produced; tests read this.
struct BraceletTrace {
  int strong_sets = 0;          // peeled strong stable sets
  int generic_strong_sets = 0;  // of those, found by generic search
  bool equal_construction = false;     // finished by the equal-size construction
  bool exact_tail = false;      // finished by exact search (a bag ran empty)
  bool equal_fallback = false;  // equal-size construction fell back to search
  int rotation = 0;
  int case_number = 0;          // 0 shortcut, 1 or 2 as in the construction
};

namespace detail {

using BagColors = std::array<std::vector<int>, 8>;  // 1..7 -> colors

inline int bracelet_palette(int x) { return ceil_ratio(7, 3, x); }

// Bag i gets block (i-1+rho) mod 7, block b being colors b*x .. b*x+x-1
// modulo ceil(7x/3). For x = 1 the blocks collide and 0,1,0,1,0,1,2 is used.
inline BagColors bracelet_layout(int x, int rho) {
  BagColors phi;
  if (x == 1) {
    const int c[8] = {0, 0, 1, 0, 1, 0, 1, 2};
    for (int i = 1; i <= 7; ++i) phi[i] = {c[i]};
    return phi;
  }
  const int k = bracelet_palette(x);
  for (int i = 1; i <= 7; ++i) {
    const int b = (i - 1 + rho) % 7;
    for (int j = 0; j < x; ++j) phi[i].push_back((b * x + j) % k);
  }
  return phi;
}

inline std::vector<int> set_and(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int c : a)
    if (std::find(b.begin(), b.end(), c) != b.end()) out.push_back(c);
  return out;
}

inline std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int c : a)
    if (std::find(b.begin(), b.end(), c) == b.end()) out.push_back(c);
  return out;
}

inline bool contains(const std::vector<int>& a, int c) {
  return std::find(a.begin(), a.end(), c) != a.end();
}

struct Blocks {
  std::vector<int> c61, c613, c13;
};

inline Blocks blocks(const BagColors& phi) {
  Blocks b;
  b.c61 = set_minus(set_and(phi[1], phi[6]), phi[3]);
  b.c613 = set_and(set_and(phi[1], phi[6]), phi[3]);
  b.c13 = set_minus(set_and(phi[1], phi[3]), phi[6]);
  return b;
}

inline bool layout_fits(const BagColors& phi) {
  const Blocks b = blocks(phi);
  const int n = static_cast<int>(b.c613.size());
  return b.c61.size() + b.c613.size() + b.c13.size() == phi[1].size() &&
         static_cast<int>(b.c13.size()) >= n - 1 && static_cast<int>(b.c61.size()) >= n - 1;
}

// Assigns pool colors to a clique of vertices, pinned vertices first.
inline void fill(std::vector<int>& color, const std::vector<int>& verts,
                 const std::vector<int>& pool) {
  std::vector<int> used;
  for (int v : verts)
    if (color[v] >= 0) used.push_back(color[v]);
  auto free = set_minus(pool, used);
  std::size_t next = 0;
  for (int v : verts)
    if (color[v] < 0) {
      require(next < free.size(), "bracelet: bag has more vertices than colors");
      color[v] = free[next++];
    }
}

// The pair step: colors shared by the two pools go first to vertices
// without cross neighbors, then to disjoint non-edges between the signed
// sides; everything else is arbitrary.
inline void pair_assign(const Graph& g, std::vector<int>& color, const std::vector<int>& p,
                        const std::vector<int>& pool_p, const std::vector<int>& q,
                        const std::vector<int>& pool_q) {
  require(p.size() == pool_p.size() && q.size() == pool_q.size(),
          "bracelet pair: pool sizes differ from bag sizes");
  auto has_cross = [&](int v, const std::vector<int>& other) {
    for (int u : other)
      if (g.adjacent(u, v)) return true;
    return false;
  };
  std::vector<int> ps, qs, zeros;
  for (int v : p) (has_cross(v, q) ? ps : zeros).push_back(v);
  for (int v : q) (has_cross(v, p) ? qs : zeros).push_back(v);
  const auto shared = set_and(pool_p, pool_q);
  std::size_t s = 0;
  for (int z : zeros) {
    if (s == shared.size()) break;
    color[z] = shared[s++];
  }
  const int need = static_cast<int>(shared.size() - s);
  if (need > 0) {
    BipartiteGraph bg{static_cast<int>(ps.size()), static_cast<int>(qs.size()), {}};
    for (int i = 0; i < bg.left; ++i)
      for (int j = 0; j < bg.right; ++j)
        if (!g.adjacent(ps[i], qs[j])) bg.edges.push_back({i, j});
    const auto m = max_bipartite_matching(bg);
    require(m.size() >= need, "bracelet pair: too few disjoint non-edges for the shared colors");
    for (int e = 0; e < need; ++e) {
      color[ps[m.matching[e].first]] = shared[s];
      color[qs[m.matching[e].second]] = shared[s];
      ++s;
    }
  }
  fill(color, p, pool_p);
  fill(color, q, pool_q);
}

// Vertices of `from` by decreasing neighborhood in `into` (a chain).
inline std::vector<int> by_reach(const Graph& g, std::vector<int> from, const std::vector<int>& into) {
  auto reach = [&](int v) {
    int c = 0;
    for (int u : into) c += g.adjacent(u, v);
    return c;
  };
  std::stable_sort(from.begin(), from.end(), [&](int a, int b) { return reach(a) > reach(b); });
  return from;
}

// Gives each r in `rest` (ordered by decreasing reach) a distinct
// non-neighbor in `signed_side`, greedily.
inline std::vector<int> injective_non_neighbors(const Graph& g, const std::vector<int>& rest,
                                                const std::vector<int>& signed_side) {
  std::vector<int> out;
  std::vector<char> used(g.size(), 0);
  for (int r : rest) {
    int pick = -1;
    for (int s : signed_side)
      if (!used[s] && !g.adjacent(r, s)) {
        pick = s;
        break;
      }
    require(pick >= 0, "bracelet: vertex of R has no unused non-neighbor");
    used[pick] = 1;
    out.push_back(pick);
  }
  return out;
}

// Colors of A1's vertices in `r` are pushed onto partners in `bag` that are
// not adjacent to them; the rest of `bag` takes the remaining colors.
inline void side_assign(const Graph& g, std::vector<int>& color, const std::vector<int>& r,
                        const std::vector<int>& zero, const std::vector<int>& signed_side,
                        const std::vector<int>& bag, const std::vector<int>& pool,
                        BraceletTrace& trace) {
  std::vector<int> partner;
  if (r.size() <= zero.size()) {
    partner.assign(zero.begin(), zero.begin() + r.size());
  } else {
    trace.case_number = 2;
    partner = injective_non_neighbors(g, r, signed_side);
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    require(!g.adjacent(r[i], partner[i]), "bracelet: partner is a neighbor");
    color[partner[i]] = color[r[i]];
  }
  fill(color, bag, pool);
}

inline int sub_omega(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> vs = a;
  vs.insert(vs.end(), b.begin(), b.end());
  return clique_number(induced_subgraph(g, std::span<const int>(vs))).omega;
}

inline void expect_equal(const BraceletSpec& s, int x, const char* who) {
  for (int i = 1; i <= 7; ++i)
    if (s.bag(i) != x)
      throw InvalidInput(std::string(who) + ": bag A" + std::to_string(i) + " has size " +
                         std::to_string(s.bag(i)) + ", expected " + std::to_string(x));
}

inline Coloring to_coloring(const std::vector<int>& color, int k) {
  Coloring c;
  c.k = k;
  for (int v : color) {
    require(v >= 0 && v < k, "bracelet: vertex left uncolored");
    c.color.push_back(v + 1);
  }
  return c;
}

inline Coloring finish(const Graph& g, const Coloring& c, int budget, const char* who) {
  const auto chk = verify_coloring(g, c);
  require(chk.proper, std::string(who) + ": coloring is not proper");
  require(c.k <= budget, std::string(who) + ": " + std::to_string(c.k) +
                             " colors exceed budget " + std::to_string(budget));
  return c;
}

}  // namespace detail

/// Equal bags of size x, A6+ and A3- empty, omega(A7+ u A2-) <= x.
inline Coloring color_bracelet_one_pair(const BraceletSpec& s, int x) {
  const char* who = "color_bracelet_one_pair";
  detail::expect_equal(s, x, who);
  if (!s.one_uncertain_pair()) throw InvalidInput(std::string(who) + ": A6+ or A3- nonempty");
  const auto r = realize(s);
  if (detail::sub_omega(r.graph, r.parts[A7_plus], r.parts[A2_minus]) > x)
    throw InvalidInput(std::string(who) + ": clique across A7+ and A2- exceeds x");
  const int k = x == 1 ? 3 : detail::bracelet_palette(x);
  const auto phi = detail::bracelet_layout(x, 0);
  std::vector<int> color(r.graph.size(), -1);
  for (int i : {1, 3, 4, 5, 6}) detail::fill(color, r.bags[i], phi[i]);
  detail::pair_assign(r.graph, color, r.bags[7], phi[7], r.bags[2], phi[2]);
  return detail::finish(r.graph, detail::to_coloring(color, k), ceil_ratio(7, 6, 2 * x), who);
}

/// Equal bags of size x, each cross clique at most x: ceil(7x/3) colors.
inline Coloring color_bracelet_equal(const BraceletSpec& s, int x, BraceletTrace* trace = nullptr) {
  const char* who = "color_bracelet_equal";
  BraceletTrace local;
  BraceletTrace& tr = trace ? *trace : local;
  detail::expect_equal(s, x, who);
  const auto r = realize(s);
  const Graph& g = r.graph;
  for (const auto& c : kCross)
    if (detail::sub_omega(g, r.parts[c.left], r.parts[c.right]) > x)
      throw InvalidInput(std::string(who) + ": cross clique " + c.name + " exceeds x");
  const int k = x == 1 ? 3 : detail::bracelet_palette(x);
  const int budget = ceil_ratio(7, 6, 2 * x);
  int rho = 0;
  if (x > 1)
    while (rho < 7 && !detail::layout_fits(detail::bracelet_layout(x, rho))) ++rho;
  require(rho < 7, "bracelet: no rotation of the block layout fits");
  tr.rotation = rho;
  const auto phi = detail::bracelet_layout(x, rho);
  const auto b = detail::blocks(phi);
  std::vector<int> color(g.size(), -1);

  try {
    for (int i : {4, 5}) detail::fill(color, r.bags[i], phi[i]);
    detail::pair_assign(g, color, r.bags[7], phi[7], r.bags[2], phi[2]);
    const auto& a1p = r.parts[A1_plus];
    const auto& a1m = r.parts[A1_minus];
    auto a1_without = [&](const std::vector<int>& part) {
      return detail::set_minus(r.bags[1], part);
    };
    if (a1p.size() <= b.c61.size()) {
      tr.case_number = 0;
      for (std::size_t i = 0; i < a1p.size(); ++i) color[a1p[i]] = b.c61[i];
      std::vector<int> used(b.c61.begin(), b.c61.begin() + a1p.size());
      detail::pair_assign(g, color, a1_without(a1p), detail::set_minus(phi[1], used), r.bags[6],
                          phi[6]);
      detail::fill(color, r.bags[3], phi[3]);
    } else if (a1m.size() <= b.c13.size()) {
      tr.case_number = 0;
      for (std::size_t i = 0; i < a1m.size(); ++i) color[a1m[i]] = b.c13[i];
      std::vector<int> used(b.c13.begin(), b.c13.begin() + a1m.size());
      detail::pair_assign(g, color, a1_without(a1m), detail::set_minus(phi[1], used), r.bags[3],
                          phi[3]);
      detail::fill(color, r.bags[6], phi[6]);
    } else {
      tr.case_number = 1;
      const auto minus = detail::by_reach(g, a1m, r.parts[A6_plus]);
      const auto plus = detail::by_reach(g, a1p, r.parts[A3_minus]);
      const std::size_t nm = b.c13.size(), np = b.c61.size();
      for (std::size_t i = 0; i < nm; ++i) color[minus[i]] = b.c13[i];
      for (std::size_t i = 0; i < np; ++i) color[plus[i]] = b.c61[i];
      const std::vector<int> r_minus(minus.begin() + nm, minus.end());
      const std::vector<int> r_plus(plus.begin() + np, plus.end());
      require(r_minus.size() + r_plus.size() + r.parts[A1_0].size() == b.c613.size(),
              "bracelet: |R1-| + |R1+| + |A1_0| differs from |C613|");
      std::size_t c = 0;
      for (const auto* part : {&r_minus, &r_plus, &r.parts[A1_0]})
        for (int v : *part) color[v] = b.c613[c++];
      detail::side_assign(g, color, r_minus, r.parts[A6_0], r.parts[A6_plus], r.bags[6], phi[6],
                          tr);
      detail::side_assign(g, color, r_plus, r.parts[A3_0], r.parts[A3_minus], r.bags[3], phi[3],
                          tr);
    }
    return detail::finish(g, detail::to_coloring(color, k), budget, who);
  } catch (const InternalDefect&) {
    // Construction failed: exact search for a k-coloring.
    tr.equal_fallback = true;
    detail::ExactColoring search(g, SearchBudget::from_env());
    require(search.try_k(k), "bracelet: no coloring within the budget");
    Coloring c{search.colors(), k};
    return detail::finish(g, c, budget, who);
  }
}

namespace detail {

// Candidate vertices for a designated role: signed part first (vertices
// complete to the partner side leading), then the whole bag.
inline std::vector<int> role_candidates(const Graph& g, const BraceletRealization& r, int bag,
                                        int part, const std::vector<int>& partner) {
  std::vector<int> out;
  if (part >= 0) out = by_reach(g, r.parts[part], partner);
  for (int v : r.bags[bag])
    if (!contains(out, v)) out.push_back(v);
  return out;
}

inline bool is_strong(const Graph& g, const std::vector<int>& s, int omega) {
  if (!is_stable(g, s)) return false;
  VertexSet gone(g.size());
  for (int v : s) gone.set(v);
  return clique_number(remove_vertices(g, gone)).omega < omega;
}

struct Role {
  int bag;
  int part;     // -1: any vertex of the bag
  int partner;  // part whose neighborhood orders the candidates, -1 none
};

// Strong stable set for the first non-maximum A_i u A_{i+1}.
inline std::optional<std::vector<int>> designated_strong_set(const Graph& g,
                                                             const BraceletRealization& r,
                                                             int omega) {
  auto size = [&](int i) { return static_cast<int>(r.bags[i].size()); };
  auto pair_max = [&](int i) { return size(i) + size(i % 7 + 1) == omega; };
  const Role a1{1, -1, -1}, a4{4, -1, -1}, a5{5, -1, -1};
  const Role a1m{1, A1_minus, A6_plus}, a1p{1, A1_plus, A3_minus};
  const Role a2m{2, A2_minus, A7_plus}, a3m{3, A3_minus, A1_plus};
  const Role a6p{6, A6_plus, A1_minus}, a7p{7, A7_plus, A2_minus};
  struct Case {
    int pair;  // A_pair u A_pair+1
    std::array<Role, 3> roles;
  };
  const Case cases[] = {
      {4, {a1, a6p, a3m}}, {5, {a4, a2m, a7p}}, {3, {a5, a7p, a2m}}, {6, {a5, a3m, a1m}},
      {2, {a4, a6p, a1p}}, {7, {a4, a2m, a6p}}, {1, {a5, a7p, a3m}},
  };
  for (const auto& c : cases) {
    if (pair_max(c.pair)) continue;
    std::array<std::vector<int>, 3> cand;
    for (int j = 0; j < 3; ++j) {
      const Role& ro = c.roles[j];
      cand[j] = role_candidates(g, r, ro.bag, ro.part,
                                ro.partner >= 0 ? r.parts[ro.partner] : std::vector<int>{});
    }
    for (int u : cand[0])
      for (int v : cand[1])
        for (int w : cand[2]) {
          std::vector<int> s{u, v, w};
          if (is_strong(g, s, omega)) return s;
        }
  }
  return std::nullopt;
}

}  // namespace detail

/// Any valid 7-bracelet within ceil(7w/6): peel strong stable sets until
/// the bags are equal, then the equal-size construction.
inline Coloring color_bracelet(const BraceletSpec& spec, BraceletTrace* trace = nullptr) {
  const char* who = "color_bracelet";
  BraceletTrace local;
  BraceletTrace& tr = trace ? *trace : local;
  if (auto v = validate_bracelet(spec); !v.empty())
    throw InvalidInput(std::string(who) + ": invalid bracelet: " + v.front().rule);
  const auto top = realize(spec);
  const int omega = clique_number(top.graph).omega;
  const int budget = ceil_ratio(7, 6, omega);

  BraceletSpec cur = spec;
  std::vector<int> orig(top.graph.size());  // vertex of cur -> vertex of spec
  for (int v = 0; v < top.graph.size(); ++v) orig[v] = v;
  std::vector<std::vector<int>> peeled;
  std::vector<int> color(top.graph.size(), -1);
  int k = 0;
  while (true) {
    const auto r = realize(cur);
    const Graph& g = r.graph;
    if (g.size() == 0) break;
    const int w = clique_number(g).omega;
    bool empty_bag = false;
    for (int i = 1; i <= 7; ++i) empty_bag = empty_bag || r.bags[i].empty();
    Coloring c;
    if (empty_bag) {
      tr.exact_tail = true;
      detail::ExactColoring search(g, SearchBudget::from_env());
      int t = std::max(w, 1);
      while (!search.try_k(t)) ++t;
      c = Coloring{search.colors(), t};
    } else {
      bool equal = 2 * cur.bag(1) == w;
      for (int i = 1; i <= 7; ++i) equal = equal && cur.bag(i) == cur.bag(1);
      if (!equal) {
        auto s = detail::designated_strong_set(g, r, w);
        if (!s) {
          s = find_strong_stable_set(g);
          if (s) ++tr.generic_strong_sets;
        }
        require(s.has_value(), "bracelet: unequal bags but no strong stable set");
        ++tr.strong_sets;
        std::vector<int> back;
        for (int v : *s) back.push_back(orig[v]);
        peeled.push_back(back);
        std::vector<int> m;
        cur = remove_bracelet_vertices(cur, *s, &m);
        std::vector<int> next;
        for (int v : m) next.push_back(orig[v]);
        orig = std::move(next);
        continue;
      }
      tr.equal_construction = true;
      c = color_bracelet_equal(cur, cur.bag(1), &tr);
    }
    for (int v = 0; v < g.size(); ++v) color[orig[v]] = c.color[v] - 1;
    k = c.k;
    break;
  }
  for (const auto& s : peeled) {
    for (int v : s) color[v] = k;
    ++k;
  }
  return detail::finish(top.graph, detail::to_coloring(color, k), budget, who);
}

}  // namespace chroma

#endif  // CHROMA_COLOR_BRACELET_HPP
