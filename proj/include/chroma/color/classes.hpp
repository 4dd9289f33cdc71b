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

#ifndef CHROMA_COLOR_CLASSES_HPP
#define CHROMA_COLOR_CLASSES_HPP

#include <span>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/oracle/coloring.hpp"
#include "chroma/oracle/cover.hpp"
#include "chroma/structure/blowup.hpp"

namespace chroma {

// A coloring of a blowup, stored as one base stable set per color: base
// vertex i lies in exactly w[i] classes, and its bag is spread over them.
using ClassList = std::vector<Mask>;

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InternalDefect(what);
}

inline std::vector<int> coverage(int n, const ClassList& cl) {
  std::vector<int> got(n, 0);
  for (Mask m : cl)
    for (int v : mask_vertices(m)) ++got[v];
  return got;
}

/// Every class stable and nonempty, coverage exactly w.
inline bool classes_exact(const Graph& base, std::span<const int> w, const ClassList& cl) {
  auto nb = neighbor_masks(base);
  for (Mask m : cl) {
    if (!m) return false;
    for (Mask r = m; r; r &= r - 1)
      if (nb[std::countr_zero(r)] & m) return false;
  }
  auto got = coverage(base.size(), cl);
  for (int i = 0; i < base.size(); ++i)
    if (got[i] != w[i]) return false;
  return true;
}

/// Drops surplus memberships from the last classes, then empty classes.
inline ClassList trim(int n, std::span<const int> w, ClassList cl) {
  auto got = coverage(n, cl);
  for (auto it = cl.rbegin(); it != cl.rend(); ++it)
    for (int v : mask_vertices(*it))
      if (got[v] > w[v]) {
        *it &= ~(Mask{1} << v);
        --got[v];
      }
  std::erase(cl, Mask{0});
  return cl;
}

inline ClassList concat(ClassList a, const ClassList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<int> minus_classes(std::vector<int> w, const ClassList& cl) {
  for (Mask m : cl)
    for (int v : mask_vertices(m)) --w[v];
  for (int x : w) require(x >= 0, "class list overcovers a bag");
  return w;
}

/// Takes `times` copies of `m`.
inline ClassList repeat(Mask m, int times) { return ClassList(std::max(times, 0), m); }

/// Relabels class bits through `to` (source index -> target index).
inline ClassList map_classes(const ClassList& cl, std::span<const int> to) {
  ClassList out;
  for (Mask m : cl) {
    Mask r = 0;
    for (int v : mask_vertices(m)) r |= Mask{1} << to[v];
    out.push_back(r);
  }
  return out;
}

/// Classes from per-bag color sets over colors 0..k-1.
inline ClassList from_bag_colors(const std::vector<std::vector<int>>& bag_colors, int k) {
  ClassList out(k, 0);
  for (int i = 0; i < static_cast<int>(bag_colors.size()); ++i)
    for (int c : bag_colors[i]) out[c] |= Mask{1} << i;
  std::erase(out, Mask{0});
  return out;
}

/// Colors a blowup optimally; for a perfect blowup this uses omega colors.
inline ClassList exact_classes(const Graph& base, std::span<const int> w) {
  return blowup_chromatic_exact(base, w).classes();
}

/// Perfect blowup: exact cover, asserted to use the clique number.
inline ClassList perfect_classes(const Graph& base, std::span<const int> w) {
  ClassList cl = exact_classes(base, w);
  require(static_cast<int>(cl.size()) == max_weight_clique(base, w).weight,
          "blowup expected to be perfect needs more colors than its clique number");
  return cl;
}

/// Adds one vertex of bag v to `times` classes that avoid N(v), opening new
/// classes when none is left.
inline ClassList insert_bag(const Graph& base, ClassList cl, int v, int times) {
  const Mask nb = neighbor_masks(base)[v] | (Mask{1} << v);
  for (Mask& m : cl)
    if (times > 0 && !(m & nb)) {
      m |= Mask{1} << v;
      --times;
    }
  for (; times > 0; --times) cl.push_back(Mask{1} << v);
  return cl;
}

/// Concrete coloring of the realized blowup; colors follow class order.
inline Coloring realize_classes(const BlowupRealization& r, const ClassList& cl) {
  Coloring c;
  c.color.assign(r.graph.size(), 0);
  c.k = static_cast<int>(cl.size());
  std::vector<std::size_t> next(r.bags.size(), 0);
  for (int k = 0; k < c.k; ++k)
    for (int v : mask_vertices(cl[k])) {
      require(next[v] < r.bags[v].size(), "class list exceeds bag size");
      c.color[r.bags[v][next[v]++]] = k + 1;
    }
  for (std::size_t v = 0; v < r.bags.size(); ++v)
    require(next[v] == r.bags[v].size(), "class list leaves a bag uncolored");
  return c;
}

inline int omega_of(const Graph& base, std::span<const int> w) {
  return max_weight_clique(base, w).weight;
}

/// Checks a finished class list against exact coverage and a color budget.
inline const ClassList& checked(const Graph& base, std::span<const int> w,
                                const ClassList& cl, int budget, const char* who) {
  require(classes_exact(base, w, cl), std::string(who) + ": classes do not color the blowup");
  require(static_cast<int>(cl.size()) <= budget,
          std::string(who) + ": " + std::to_string(cl.size()) + " colors exceed budget " +
              std::to_string(budget));
  return cl;
}

}  // namespace chroma

#endif  // CHROMA_COLOR_CLASSES_HPP
