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

#ifndef CHROMA_STRUCTURE_BRACELET_HPP
#define CHROMA_STRUCTURE_BRACELET_HPP

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chroma/freeness.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// Sub-bags of a 7-bracelet in declaration (and realization) order.
enum Part : int {
  A1_0, A1_plus, A1_minus, A2_0, A2_minus, A3_0, A3_minus,
  A4, A5, A6_0, A6_plus, A7_0, A7_plus, kParts
};

inline constexpr std::array<const char*, kParts> kPartNames{
    "A1_0", "A1+", "A1-", "A2_0", "A2-", "A3_0", "A3-", "A4", "A5", "A6_0", "A6+", "A7_0", "A7+"};

/// Bag (1..7) of each part.
inline constexpr std::array<int, kParts> kBagOfPart{1, 1, 1, 2, 2, 3, 3, 4, 5, 6, 6, 7, 7};

inline Part part_by_name(const std::string& name) {
  for (int p = 0; p < kParts; ++p)
    if (name == kPartNames[p]) return static_cast<Part>(p);
  throw InvalidInput("unknown bracelet part '" + name + "'");
}

/// Unsigned part of the bag holding p.
inline constexpr Part zero_part(Part p) {
  switch (p) {
    case A1_plus: case A1_minus: return A1_0;
    case A2_minus: return A2_0;
    case A3_minus: return A3_0;
    case A6_plus: return A6_0;
    case A7_plus: return A7_0;
    default: return p;
  }
}

using CrossRelation = std::vector<std::pair<int, int>>;

/// Part sizes plus the three cross relations, as local indices:
/// e72 in A7+ x A2-, e13 in A1+ x A3-, e61 in A6+ x A1-.
struct BraceletSpec {
  std::array<int, kParts> size{};
  CrossRelation e72, e13, e61;

  int part(Part p) const { return size[p]; }
  int bag(int i) const {
    int s = 0;
    for (int p = 0; p < kParts; ++p)
      if (kBagOfPart[p] == i) s += size[p];
    return s;
  }
  int total() const {
    int s = 0;
    for (int x : size) s += x;
    return s;
  }
  bool one_uncertain_pair() const { return size[A6_plus] == 0 && size[A3_minus] == 0; }

  /// All bags singletons, no signed parts: C7.
  static BraceletSpec singletons() {
    BraceletSpec s;
    for (Part p : {A1_0, A2_0, A3_0, A4, A5, A6_0, A7_0}) s.size[p] = 1;
    return s;
  }
  /// Equal bags of size x, all unsigned.
  static BraceletSpec plain(int x) {
    BraceletSpec s;
    for (Part p : {A1_0, A2_0, A3_0, A4, A5, A6_0, A7_0}) s.size[p] = x;
    return s;
  }
};

inline bool operator==(const BraceletSpec& a, const BraceletSpec& b) {
  auto sorted = [](CrossRelation r) {
    std::sort(r.begin(), r.end());
    return r;
  };
  return a.size == b.size && sorted(a.e72) == sorted(b.e72) && sorted(a.e13) == sorted(b.e13) &&
         sorted(a.e61) == sorted(b.e61);
}

struct CrossInfo {
  CrossRelation BraceletSpec::*rel;
  Part left, right;
  const char* name;
};

inline constexpr std::array<CrossInfo, 3> kCross{{
    {&BraceletSpec::e72, A7_plus, A2_minus, "e72"},
    {&BraceletSpec::e13, A1_plus, A3_minus, "e13"},
    {&BraceletSpec::e61, A6_plus, A1_minus, "e61"},
}};

struct BraceletRealization {
  Graph graph;
  std::vector<int> part_of;                          // vertex -> part
  std::vector<int> bag_of;                           // vertex -> 1..7
  std::array<std::vector<int>, kParts> parts;        // part -> vertices
  std::array<std::vector<int>, 8> bags;              // 1..7 -> vertices

  int vertex(Part p, int local) const { return parts[p][local]; }
};

namespace detail {

inline bool bags_complete(int a, int b) {
  const int d = (a - b + 7) % 7;
  return d == 1 || d == 6;
}

inline void check_cross_ranges(const BraceletSpec& s) {
  for (const auto& c : kCross)
    for (auto [u, v] : s.*c.rel)
      if (u < 0 || u >= s.size[c.left] || v < 0 || v >= s.size[c.right])
        throw InvalidInput(std::string("bracelet cross relation ") + c.name +
                           " has an index out of range");
}

}  // namespace detail

/// Vertices numbered part by part in declaration order.
inline BraceletRealization realize(const BraceletSpec& s) {
  for (int x : s.size)
    if (x < 0) throw InvalidInput("bracelet part sizes must be nonnegative");
  detail::check_cross_ranges(s);
  BraceletRealization r;
  r.graph = Graph(s.total());
  int next = 0;
  for (int p = 0; p < kParts; ++p)
    for (int j = 0; j < s.size[p]; ++j) {
      r.parts[p].push_back(next);
      r.bags[kBagOfPart[p]].push_back(next);
      r.part_of.push_back(p);
      r.bag_of.push_back(kBagOfPart[p]);
      ++next;
    }
  for (int u = 0; u < next; ++u)
    for (int v = u + 1; v < next; ++v)
      if (r.bag_of[u] == r.bag_of[v] || detail::bags_complete(r.bag_of[u], r.bag_of[v]))
        r.graph.add_edge(u, v);
  for (const auto& c : kCross)
    for (auto [u, v] : s.*c.rel) r.graph.add_edge(r.parts[c.left][u], r.parts[c.right][v]);
  return r;
}

struct BraceletViolation {
  std::string rule;
  std::vector<int> witness;  // realized vertices
};

/// Empty iff the spec is a 7-bracelet whose realization is (P7,C4,C5)-free.
inline std::vector<BraceletViolation> validate_bracelet(const BraceletSpec& s) {
  std::vector<BraceletViolation> out;
  for (int p = 0; p < kParts; ++p)
    if (s.size[p] < 0) out.push_back({std::string("negative size of ") + kPartNames[p], {}});
  if (!out.empty()) return out;
  for (const auto& c : kCross)
    for (auto [u, v] : s.*c.rel)
      if (u < 0 || u >= s.size[c.left] || v < 0 || v >= s.size[c.right])
        out.push_back({std::string("cross relation ") + c.name + " index out of range", {}});
  if (!out.empty()) return out;
  for (int i = 1; i <= 7; ++i)
    if (s.bag(i) == 0) out.push_back({"bag A" + std::to_string(i) + " is empty", {}});

  const auto r = realize(s);
  auto sub = [](Part p) {
    static const std::array<const char*, kParts> pretty{
        "A₁⁰", "A₁⁺", "A₁⁻", "A₂⁰", "A₂⁻", "A₃⁰", "A₃⁻", "A₄", "A₅", "A₆⁰", "A₆⁺", "A₇⁰", "A₇⁺"};
    return std::string(pretty[p]);
  };
  for (const auto& c : kCross) {
    const auto& rel = s.*c.rel;
    std::set<std::pair<int, int>> seen;
    for (auto e : rel)
      if (!seen.insert(e).second)
        out.push_back({std::string("duplicate pair in ") + c.name,
                       {r.parts[c.left][e.first], r.parts[c.right][e.second]}});
    if (s.size[c.left] > 0 && s.size[c.right] == 0)
      out.push_back({sub(c.left) + " nonempty requires " + sub(c.right) + " nonempty",
                     {r.parts[c.left].front()}});
    if (s.size[c.right] > 0 && s.size[c.left] == 0)
      out.push_back({sub(c.right) + " nonempty requires " + sub(c.left) + " nonempty",
                     {r.parts[c.right].front()}});
    std::vector<char> hit_l(s.size[c.left], 0), hit_r(s.size[c.right], 0);
    for (auto [u, v] : rel) hit_l[u] = hit_r[v] = 1;
    if (s.size[c.right] > 0)
      for (int u = 0; u < s.size[c.left]; ++u)
        if (!hit_l[u])
          out.push_back({"every vertex of " + sub(c.left) + " needs a neighbor in " + sub(c.right),
                         {r.parts[c.left][u]}});
    if (s.size[c.left] > 0)
      for (int v = 0; v < s.size[c.right]; ++v)
        if (!hit_r[v])
          out.push_back({"every vertex of " + sub(c.right) + " needs a neighbor in " + sub(c.left),
                         {r.parts[c.right][v]}});
  }
  const auto f = check_freeness(r.graph);
  if (!f.is_free) out.push_back({"realization contains an induced " + to_string(*f.kind), f.witness});
  return out;
}

/// Moves signed vertices left without a cross neighbor into the unsigned
/// part of their bag. `old_of_new` maps realized vertices of the result to
/// those of `s`.
inline BraceletSpec normalize(const BraceletSpec& s, std::vector<int>* old_of_new = nullptr) {
  std::array<std::vector<int>, kParts> dropped;  // signed vertex without a cross neighbor
  for (int p = 0; p < kParts; ++p) dropped[p].assign(s.size[p], 0);
  for (const auto& c : kCross) {
    std::vector<char> hit_l(s.size[c.left], 0), hit_r(s.size[c.right], 0);
    for (auto [u, v] : s.*c.rel) hit_l[u] = hit_r[v] = 1;
    for (int u = 0; u < s.size[c.left]; ++u) dropped[c.left][u] |= !hit_l[u];
    for (int v = 0; v < s.size[c.right]; ++v) dropped[c.right][v] |= !hit_r[v];
  }
  BraceletSpec out;
  std::array<std::vector<int>, kParts> new_local;
  std::array<std::vector<std::pair<int, int>>, kParts> members;  // (old part, old local)
  for (int p = 0; p < kParts; ++p) new_local[p].assign(s.size[p], -1);
  for (int p = 0; p < kParts; ++p)
    for (int j = 0; j < s.size[p]; ++j)
      if (!dropped[p][j]) {
        new_local[p][j] = static_cast<int>(members[p].size());
        members[p].push_back({p, j});
      }
  for (int p = 0; p < kParts; ++p)
    for (int j = 0; j < s.size[p]; ++j)
      if (dropped[p][j]) members[zero_part(static_cast<Part>(p))].push_back({p, j});
  for (int p = 0; p < kParts; ++p) out.size[p] = static_cast<int>(members[p].size());
  for (const auto& c : kCross)
    for (auto [u, v] : s.*c.rel)
      (out.*c.rel)
          .push_back({new_local[c.left][u], new_local[c.right][v]});
  if (old_of_new) {
    std::array<int, kParts> start{};
    for (int p = 1; p < kParts; ++p) start[p] = start[p - 1] + s.size[p - 1];
    old_of_new->clear();
    for (int p = 0; p < kParts; ++p)
      for (auto [op, oj] : members[p]) old_of_new->push_back(start[op] + oj);
  }
  return out;
}

/// Deletes realized vertices, then normalizes. `old_of_new` as in normalize.
inline BraceletSpec remove_bracelet_vertices(const BraceletSpec& s,
                                             const std::vector<int>& removed,
                                             std::vector<int>* old_of_new = nullptr) {
  const auto r = realize(s);
  std::vector<char> gone(r.graph.size(), 0);
  for (int v : removed) gone.at(v) = 1;
  BraceletSpec t;
  std::array<std::vector<int>, kParts> new_local;
  std::vector<int> kept;
  for (int p = 0; p < kParts; ++p) {
    new_local[p].assign(s.size[p], -1);
    for (int j = 0; j < s.size[p]; ++j)
      if (!gone[r.parts[p][j]]) {
        new_local[p][j] = t.size[p]++;
        kept.push_back(r.parts[p][j]);
      }
  }
  for (const auto& c : kCross)
    for (auto [u, v] : s.*c.rel)
      if (new_local[c.left][u] >= 0 && new_local[c.right][v] >= 0)
        (t.*c.rel)
            .push_back({new_local[c.left][u], new_local[c.right][v]});
  std::vector<int> inner;
  BraceletSpec out = normalize(t, &inner);
  if (old_of_new) {
    old_of_new->clear();
    for (int v : inner) old_of_new->push_back(kept[v]);
  }
  return out;
}

}  // namespace chroma

#endif  // CHROMA_STRUCTURE_BRACELET_HPP
