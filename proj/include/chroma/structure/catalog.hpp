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

#ifndef CHROMA_STRUCTURE_CATALOG_HPP
#define CHROMA_STRUCTURE_CATALOG_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

// Fixed small bases. Vertex labels are the role names ("1".."11", "v",
// "t2", "t7", "f2", "f7"); colorers address vertices through them.

namespace detail {

inline Graph labelled(int n, const std::vector<std::pair<int, int>>& edges,
                      std::vector<std::string> labels) {
  Graph g(n, std::span<const std::pair<int, int>>(edges));
  g.set_labels(std::move(labels));
  return g;
}

inline std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Cycle 1-2-...-7-1 on indices 0..6.
inline std::vector<std::pair<int, int>> c7_edges() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 7; ++i) e.emplace_back(i, (i + 1) % 7);
  return e;
}

}  // namespace detail

/// The emerald: cycle 1..6, and 7~{1,6,8,11}, 8~{1,2,7,9}, 9~{2,3,8,10},
/// 10~{3,4,5,9}, 11~{4,5,6,7}. Index = label - 1.
inline const Graph& emerald() {
  static const Graph g = [] {
    std::vector<std::pair<int, int>> e;
    auto add = [&](int a, int b) { e.emplace_back(a - 1, b - 1); };
    for (int i = 1; i <= 6; ++i) add(i, i % 6 + 1);
    add(7, 1), add(7, 6), add(7, 8), add(7, 11);
    add(8, 1), add(8, 2), add(8, 9);
    add(9, 2), add(9, 3), add(9, 10);
    add(10, 3), add(10, 4), add(10, 5);
    add(11, 4), add(11, 5), add(11, 6);
    return detail::labelled(11, e, detail::numbered(11));
  }();
  return g;
}

inline const Graph& c7_base() {
  static const Graph g = detail::labelled(7, detail::c7_edges(), detail::numbered(7));
  return g;
}

/// C7 plus v adjacent to 3,4,5,6.
inline const Graph& c7_plus_v_base() {
  static const Graph g = [] {
    auto e = detail::c7_edges();
    for (int i : {3, 4, 5, 6}) e.emplace_back(7, i - 1);
    auto l = detail::numbered(7);
    l.push_back("v");
    return detail::labelled(8, e, l);
  }();
  return g;
}

/// C7 plus adjacent t2 ~ {1,2,3} and t7 ~ {6,7,1}. Also the base of Gx.
inline const Graph& c7_plus_2t_base() {
  static const Graph g = [] {
    auto e = detail::c7_edges();
    for (int i : {1, 2, 3}) e.emplace_back(7, i - 1);
    for (int i : {6, 7, 1}) e.emplace_back(8, i - 1);
    e.emplace_back(7, 8);
    auto l = detail::numbered(7);
    l.push_back("t2");
    l.push_back("t7");
    return detail::labelled(9, e, l);
  }();
  return g;
}

/// C7 plus non-adjacent f2 ~ {4,5,6,7} and f7 ~ {2,3,4,5}.
inline const Graph& c7_plus_2f_base() {
  static const Graph g = [] {
    auto e = detail::c7_edges();
    for (int i : {4, 5, 6, 7}) e.emplace_back(7, i - 1);
    for (int i : {2, 3, 4, 5}) e.emplace_back(8, i - 1);
    auto l = detail::numbered(7);
    l.push_back("f2");
    l.push_back("f7");
    return detail::labelled(9, e, l);
  }();
  return g;
}

/// The emerald without vertex 8, keeping labels 1..7, 9, 10, 11.
inline const Graph& e_minus_8_base() {
  static const Graph g = [] {
    std::vector<int> keep{0, 1, 2, 3, 4, 5, 6, 8, 9, 10};
    return induced_subgraph(emerald(), std::span<const int>(keep));
  }();
  return g;
}

/// Index of the vertex carrying `role` as its label.
inline int role(const Graph& g, std::string_view name) {
  const auto& l = g.labels();
  for (int i = 0; i < static_cast<int>(l.size()); ++i)
    if (l[i] == name) return i;
  throw InvalidInput("base has no vertex labelled '" + std::string(name) + "'");
}

/// Names usable in the JSON spec format.
inline const std::vector<std::string>& base_names() {
  static const std::vector<std::string> names{
      "c7", "c7_2f", "c7_2t", "c7v", "e_minus_8", "emerald", "g9", "gx", "special_emerald"};
  return names;
}

inline const Graph& base_by_name(std::string_view name) {
  if (name == "emerald" || name == "special_emerald") return emerald();
  if (name == "c7") return c7_base();
  if (name == "c7v") return c7_plus_v_base();
  if (name == "c7_2t" || name == "gx" || name == "g9") return c7_plus_2t_base();
  if (name == "c7_2f") return c7_plus_2f_base();
  if (name == "e_minus_8") return e_minus_8_base();
  throw InvalidInput("unknown base '" + std::string(name) + "'");
}

}  // namespace chroma

#endif  // CHROMA_STRUCTURE_CATALOG_HPP
