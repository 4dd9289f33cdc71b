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

#ifndef CHROMA_COLOR_DRIVER_HPP
#define CHROMA_COLOR_DRIVER_HPP

#include <string>
#include <vector>

#include "chroma/color/emerald.hpp"
#include "chroma/freeness.hpp"
#include "chroma/oracle/clique.hpp"
#include "chroma/oracle/coloring.hpp"
#include "chroma/oracle/separators.hpp"
#include "chroma/oracle/strong_stable.hpp"
#include "chroma/structure/blowup.hpp"

namespace chroma {

class NotInClass : public Error {
 public:
  explicit NotInClass(FreenessReport r)
      : Error("graph is not (P7,C4,C5)-free: induced " + to_string(*r.kind) + " on " +
              join(r.witness)),
        report_(std::move(r)) {}
  const FreenessReport& report() const { return report_; }

 private:
  static std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  }
  FreenessReport report_;
};

class StructureUnavailable : public Error {
 public:
  using Error::Error;
};

struct DriverTrace {
  int components = 0;  // splits into two or more components
  int clique_cutsets = 0;
  int universal = 0;
  int strong_sets = 0;
  int emerald_pieces = 0;
};

namespace detail {

inline Coloring emerald_piece(const Graph& g, const RecognizedBlowup& r) {
  const ClassList cl = emerald_classes(r.spec.weights);
  std::vector<std::vector<int>> bag(11);
  for (int v = 0; v < g.size(); ++v) bag[r.bag_of[v]].push_back(v);
  Coloring c;
  c.color.assign(g.size(), 0);
  c.k = static_cast<int>(cl.size());
  std::vector<std::size_t> next(11, 0);
  for (int k = 0; k < c.k; ++k)
    for (int b : mask_vertices(cl[k])) {
      require(next[b] < bag[b].size(), "emerald classes exceed a bag");
      c.color[bag[b][next[b]++]] = k + 1;
    }
  for (int b = 0; b < 11; ++b) require(next[b] == bag[b].size(), "emerald bag left uncolored");
  return c;
}

// Colors of `piece` renamed so that the vertices of K (positions in the piece
// listed by kpos) receive `want`; colors outside K go to fresh ids > used.
inline std::vector<int> permute_onto(const Coloring& piece, const std::vector<int>& kpos,
                                     const std::vector<int>& want, int used) {
  std::vector<int> map(piece.k + 1, 0);
  std::vector<char> taken(used + piece.k + 2, 0);
  for (std::size_t i = 0; i < kpos.size(); ++i) {
    const int from = piece.color[kpos[i]];
    require(map[from] == 0, "clique cutset colored non-injectively");
    map[from] = want[i];
    taken[want[i]] = 1;
  }
  int fresh = 1;
  for (int c = 1; c <= piece.k; ++c) {
    if (map[c] != 0) continue;
    while (taken[fresh]) ++fresh;
    map[c] = fresh;
    taken[fresh] = 1;
  }
  std::vector<int> out(piece.color.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = map[piece.color[v]];
  return out;
}

inline Coloring drive(const Graph& g, DriverTrace* tr, const SearchBudget& budget) {
  const int n = g.size();
  if (n == 0) return {};
  auto sub = [&](const std::vector<int>& vs) { return drive(induced_subgraph(g, vs), tr, budget); };

  // (1) components; color ids are reused across components.
  const auto comps = components(g);
  if (comps.size() > 1) {
    if (tr) ++tr->components;
    Coloring c;
    c.color.assign(n, 0);
    for (const auto& comp : comps) {
      const Coloring cc = sub(comp);
      for (std::size_t i = 0; i < comp.size(); ++i) c.color[comp[i]] = cc.color[i];
      c.k = std::max(c.k, cc.k);
    }
    return c;
  }

  // (2) clique cutset: each piece is K plus one component of G - K.
  if (auto cut = find_clique_cutset(g)) {
    if (tr) ++tr->clique_cutsets;
    Coloring c;
    c.color.assign(n, 0);
    const auto& K = cut->clique;
    std::vector<int> want;
    for (const auto& comp : cut->components) {
      std::vector<int> piece = K;
      piece.insert(piece.end(), comp.begin(), comp.end());
      std::sort(piece.begin(), piece.end());
      const Coloring pc = sub(piece);
      std::vector<int> kpos;
      for (int v : K) kpos.push_back(static_cast<int>(
          std::lower_bound(piece.begin(), piece.end(), v) - piece.begin()));
      if (want.empty())
        for (int p : kpos) want.push_back(pc.color[p]);
      const auto renamed = permute_onto(pc, kpos, want, c.k);
      for (std::size_t i = 0; i < piece.size(); ++i) c.color[piece[i]] = renamed[i];
      c.k = std::max(c.k, *std::max_element(renamed.begin(), renamed.end()));
    }
    return c;
  }

  // (3) universal vertex.
  if (auto u = find_universal_vertex(g)) {
    if (tr) ++tr->universal;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != *u) rest.push_back(v);
    const Coloring rc = sub(rest);
    Coloring c;
    c.color.assign(n, 0);
    for (std::size_t i = 0; i < rest.size(); ++i) c.color[rest[i]] = rc.color[i];
    c.k = rc.k + 1;
    c.color[*u] = c.k;
    return c;
  }

  // (4) strong stable set, skipped when the maximum cliques are out of reach.
  if (n <= kEnumerateCliquesUpTo) {
    std::optional<std::vector<int>> s;
    try {
      s = find_strong_stable_set(g, budget);
    } catch (const BudgetExceeded&) {
    }
    if (s) {
      if (tr) ++tr->strong_sets;
      VertexSet in(n);
      for (int v : *s) in.set(v);
      std::vector<int> rest;
      for (int v = 0; v < n; ++v)
        if (!in.test(v)) rest.push_back(v);
      const Coloring rc = sub(rest);
      Coloring c;
      c.color.assign(n, 0);
      for (std::size_t i = 0; i < rest.size(); ++i) c.color[rest[i]] = rc.color[i];
      c.k = rc.k + 1;
      for (int v : *s) c.color[v] = c.k;
      return c;
    }
  }

  // (5) emerald blowup.
  if (auto r = recognize_emerald_blowup_mapped(g)) {
    if (tr) ++tr->emerald_pieces;
    return emerald_piece(g, *r);
  }

  throw StructureUnavailable("no clique cutset, universal vertex, strong stable set or emerald "
                             "blowup structure on a " + std::to_string(n) + "-vertex piece");
}

}  // namespace detail

struct DriverOptions {
  // Off: skip the (P7,C4,C5)-freeness gate; the pipeline and the final
  // budget check still apply.
  bool check_class = true;
  SearchBudget budget = SearchBudget::from_env();
};

/// Colors a (P7,C4,C5)-free graph with at most ceil(11 omega / 9) colors.
inline Coloring color_graph(const Graph& g, DriverTrace* trace = nullptr,
                            const DriverOptions& opt = {}) {
  const SearchBudget& budget = opt.budget;
  if (opt.check_class) {
    auto fr = check_freeness(g);
    if (!fr.is_free) throw NotInClass(std::move(fr));
  }
  Coloring c = detail::drive(g, trace, budget);
  c.compact();
  const auto chk = verify_coloring(g, c);
  if (!chk.proper) throw InternalDefect("color_graph produced an improper coloring");
  const int omega = clique_number(g, budget).omega;
  if (c.k > eleven_ninths(omega))
    throw InternalDefect("color_graph used " + std::to_string(c.k) + " colors, budget " +
                         std::to_string(eleven_ninths(omega)));
  return c;
}

}  // namespace chroma

#endif  // CHROMA_COLOR_DRIVER_HPP
