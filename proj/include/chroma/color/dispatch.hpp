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

#ifndef CHROMA_COLOR_DISPATCH_HPP
#define CHROMA_COLOR_DISPATCH_HPP

#include <optional>
#include <span>
#include <vector>

#include "chroma/color/c7.hpp"
#include "chroma/color/emerald.hpp"
#include "chroma/isomorphism.hpp"
#include "chroma/oracle/strong_stable.hpp"

namespace chroma {

namespace detail {

inline std::optional<Mask> pick_strong(const Graph& base, std::span<const int> w) {
  auto all = strong_stable_sets_spec(base, w);
  for (Mask s : all) {
    bool keeps = true;
    for (int v : mask_vertices(s)) keeps = keeps && w[v] > 1;
    if (keeps) return s;
  }
  if (all.empty()) return std::nullopt;
  return all.front();
}

struct WeightedQuotient {
  Graph graph;
  std::vector<int> weights;
  std::vector<std::vector<int>> members;  // quotient vertex -> base vertices
};

// Support of w, with true twins of the support merged.
inline WeightedQuotient weighted_quotient(const Graph& base, std::span<const int> w) {
  const Mask support = support_mask(w);
  const auto nb = neighbor_masks(base);
  WeightedQuotient q;
  std::vector<Mask> closed;
  std::vector<int> rep;
  for (int v : mask_vertices(support)) {
    Mask c = (nb[v] | (Mask{1} << v)) & support;
    auto it = std::find(closed.begin(), closed.end(), c);
    if (it == closed.end()) {
      closed.push_back(c);
      rep.push_back(v);
      q.weights.push_back(w[v]);
      q.members.push_back({v});
    } else {
      auto k = it - closed.begin();
      q.weights[k] += w[v];
      q.members[k].push_back(v);
    }
  }
  q.graph = induced_subgraph(base, std::span<const int>(rep));
  return q;
}

inline const Graph& level_graph(Level l) {
  switch (l) {
    case Level::C7: return c7_base();
    case Level::C7PlusV: return c7_plus_v_base();
    case Level::C7Plus2F: return c7_plus_2f_base();
    case Level::C7Plus2T: return c7_plus_2t_base();
    case Level::EMinus8: return e_minus_8_base();
    case Level::Emerald: return emerald();
  }
  return emerald();
}

inline ClassList level_classes(Level l, std::vector<int> w) {
  switch (l) {
    case Level::C7:
      w.push_back(0);
      return c7_plus_v_classes(w);
    case Level::C7PlusV: return c7_plus_v_classes(w);
    case Level::C7Plus2F: return c7_plus_2f_classes(w);
    case Level::C7Plus2T: return c7_plus_2t_classes(w);
    case Level::EMinus8: return e_minus_8_classes(w);
    case Level::Emerald: return emerald_classes(w);
  }
  return {};
}

// Splits classes of quotient vertex q over its members, in order.
inline ClassList expand_quotient(const WeightedQuotient& q, std::span<const int> w,
                                 const ClassList& cl) {
  const int n = q.graph.size();
  std::vector<std::size_t> member(n, 0);
  std::vector<int> used(n, 0);
  ClassList out;
  for (Mask m : cl) {
    Mask r = 0;
    for (int v : mask_vertices(m)) {
      while (used[v] == w[q.members[v][member[v]]]) {
        ++member[v];
        used[v] = 0;
      }
      r |= Mask{1} << q.members[v][member[v]];
      ++used[v];
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace detail

inline ClassList sub_emerald_classes(const Graph& base, std::span<const int> w, Level below) {
  const auto q = detail::weighted_quotient(base, w);
  if (q.graph.size() == 0) return {};
  ClassList local;
  if (!find_induced_embedding(c7_base(), q.graph)) {
    local = perfect_classes(q.graph, q.weights);
  } else {
    bool done = false;
    for (int l = 0; l < static_cast<int>(below) && !done; ++l) {
      const Graph& target = detail::level_graph(static_cast<Level>(l));
      if (q.graph.size() > target.size()) continue;
      auto emb = find_induced_embedding(q.graph, target);
      if (!emb) continue;
      std::vector<int> tw(target.size(), 0);
      for (int v = 0; v < q.graph.size(); ++v) tw[(*emb)[v]] = q.weights[v];
      ClassList cl = detail::level_classes(static_cast<Level>(l), tw);
      std::vector<int> back(target.size() + 1, -1);
      for (int v = 0; v < q.graph.size(); ++v) back[(*emb)[v]] = v;
      for (Mask& m : cl) {
        Mask r = 0;
        for (int v : mask_vertices(m)) {
          require(back[v] >= 0, "dispatch: class uses an empty catalog vertex");
          r |= Mask{1} << back[v];
        }
        m = r;
      }
      local = std::move(cl);
      done = true;
    }
    require(done, "dispatch: no smaller catalog graph contains the support");
  }
  return detail::expand_quotient(q, w, local);
}

}  // namespace chroma

#endif  // CHROMA_COLOR_DISPATCH_HPP
