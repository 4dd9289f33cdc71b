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

#ifndef CHROMA_FREENESS_HPP
#define CHROMA_FREENESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/twins.hpp"

namespace chroma {

enum class Forbidden { C4, C5, P7 };

inline std::string to_string(Forbidden f) {
  switch (f) {
    case Forbidden::C4: return "C4";
    case Forbidden::C5: return "C5";
    case Forbidden::P7: return "P7";
  }
  return "?";
}

struct FreenessReport {
  bool is_free = true;
  std::optional<Forbidden> kind;
  std::vector<int> witness;  // cycle order for C4/C5, path order for P7
};

/// True iff `seq` induces exactly the cycle (or path) in the given order.
inline bool induces_sequence(const Graph& g, std::span<const int> seq,
                             bool cyclic) {
  const int k = static_cast<int>(seq.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (seq[i] == seq[j]) return false;
      bool consecutive = (j == i + 1) || (cyclic && i == 0 && j == k - 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  return true;
}

inline bool verify_witness(const Graph& g, const FreenessReport& r) {
  if (r.is_free) return r.witness.empty();
  if (!r.kind) return false;
  switch (*r.kind) {
    case Forbidden::C4: return r.witness.size() == 4 && induces_sequence(g, r.witness, true);
    case Forbidden::C5: return r.witness.size() == 5 && induces_sequence(g, r.witness, true);
    case Forbidden::P7: return r.witness.size() == 7 && induces_sequence(g, r.witness, false);
  }
  return false;
}

namespace detail {

inline std::optional<std::vector<int>> find_c4(const Graph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      auto common = (g.neighbors(a) & g.neighbors(c)).to_vector();
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!g.adjacent(common[i], common[j]))
            return std::vector<int>{a, common[i], c, common[j]};
    }
  return std::nullopt;
}

// Every C5 is found from its smallest vertex a as a-b-c-d-e.
inline std::optional<std::vector<int>> find_c5(const Graph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    VertexSet na = g.closed_neighbors(a);
    for (int b : g.neighbors(a).to_vector()) {
      if (b < a) continue;
      VertexSet nb = g.closed_neighbors(b);
      VertexSet cs = g.neighbors(b);
      cs.subtract(na);
      for (int c : cs.to_vector()) {
        if (c < a) continue;
        VertexSet ds = g.neighbors(c);
        ds.subtract(na);
        ds.subtract(nb);
        for (int d : ds.to_vector()) {
          if (d < a) continue;
          VertexSet es = g.neighbors(d) & g.neighbors(a);
          es.subtract(nb);
          es.subtract(g.closed_neighbors(c));
          for (int e : es.to_vector())
            if (e > a) return std::vector<int>{a, b, c, d, e};
        }
      }
    }
  }
  return std::nullopt;
}

// Depth-first extension of induced paths. `allowed` holds the vertices not
// adjacent to (and not equal to) any path vertex except the current end.
inline bool extend_path(const Graph& g, std::vector<int>& path,
                        const VertexSet& forbidden, int target) {
  if (static_cast<int>(path.size()) == target) return true;
  VertexSet cand = g.neighbors(path.back());
  cand.subtract(forbidden);
  bool found = false;
  cand.for_each([&](int v) {
    if (found) return;
    VertexSet next = forbidden | g.closed_neighbors(path.back());
    path.push_back(v);
    if (extend_path(g, path, next, target)) {
      found = true;
      return;
    }
    path.pop_back();
  });
  return found;
}

inline std::optional<std::vector<int>> find_induced_path(const Graph& g, int k) {
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> path{s};
    VertexSet forbidden(g.size());
    forbidden.set(s);
    if (extend_path(g, path, forbidden, k)) return path;
  }
  return std::nullopt;
}

inline FreenessReport scan(const Graph& g) {
  FreenessReport r;
  if (auto w = find_c4(g)) {
    r = {false, Forbidden::C4, *w};
  } else if (auto w5 = find_c5(g)) {
    r = {false, Forbidden::C5, *w5};
  } else if (auto w7 = find_induced_path(g, 7)) {
    r = {false, Forbidden::P7, *w7};
  }
  return r;
}

}  // namespace detail

/// Tests for induced P7, C4 and C5 (scanned in the order C4, C5, P7).
///
/// None of the three contains a pair of true twins, so the scan runs on the
/// true-twin quotient and maps the witness back to the smallest member of
/// each class. The result is the same as scanning g itself, only faster on
/// blowups.
inline FreenessReport check_freeness(const Graph& g) {
  TwinQuotient q = quotient_by_true_twins(g);
  FreenessReport r = detail::scan(q.base);
  if (!r.is_free) {
    auto members = q.members();
    for (int& v : r.witness) v = members[v].front();
  }
  return r;
}

}  // namespace chroma

#endif  // CHROMA_FREENESS_HPP
