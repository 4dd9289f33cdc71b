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

#ifndef CHROMA_ORACLE_COLORING_HPP
#define CHROMA_ORACLE_COLORING_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/oracle/clique.hpp"

namespace chroma {

/// Total map vertex -> color in 1..k.
struct Coloring {
  std::vector<int> color;
  int k = 0;

  /// Renumbers colors to 1..k by first appearance, so every color is used.
  Coloring& compact() {
    std::vector<int> remap;
    int next = 0;
    for (int& c : color) {
      if (c >= static_cast<int>(remap.size())) remap.resize(c + 1, 0);
      if (remap[c] == 0) remap[c] = ++next;
      c = remap[c];
    }
    k = next;
    return *this;
  }
};

struct ColoringCheck {
  bool proper = true;
  std::optional<std::pair<int, int>> violation;  // first monochromatic edge
  std::string problem;                           // non-edge problems
};

/// Proper iff total, colors in 1..k, and no edge monochromatic.
inline ColoringCheck verify_coloring(const Graph& g, const Coloring& c) {
  ColoringCheck r;
  if (static_cast<int>(c.color.size()) != g.size()) {
    r.proper = false;
    r.problem = "coloring is not total";
    return r;
  }
  for (int v = 0; v < g.size(); ++v)
    if (c.color[v] < 1 || c.color[v] > c.k) {
      r.proper = false;
      r.problem = "color out of range at vertex " + std::to_string(v);
      return r;
    }
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) {
      r.proper = false;
      r.violation = std::make_pair(u, v);
      return r;
    }
  return r;
}

inline constexpr int kMaxExactVertices = 24;

namespace detail {

// DSATUR branch and bound for a k-coloring.
class ExactColoring {
 public:
  ExactColoring(const Graph& g, SearchBudget b)
      : g_(g), n_(g.size()), color_(n_, 0), counter_(b, "chromatic_number_exact") {}

  bool try_k(int k) {
    k_ = k;
    std::fill(color_.begin(), color_.end(), 0);
    sat_.assign(n_, std::vector<int>(k + 1, 0));
    return rec(0);
  }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool rec(int colored) {
    counter_.tick();
    if (colored == n_) return true;
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      int s = 0;
      for (int c = 1; c <= k_; ++c) s += sat_[v][c] > 0;
      int d = g_.degree(v);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    if (best_sat == k_) return false;
    int max_used = 0;
    for (int c : color_) max_used = std::max(max_used, c);
    const auto nb = g_.neighbors(best).to_vector();
    for (int c = 1; c <= std::min(k_, max_used + 1); ++c) {
      if (sat_[best][c]) continue;
      color_[best] = c;
      for (int u : nb) ++sat_[u][c];
      if (rec(colored + 1)) return true;
      for (int u : nb) --sat_[u][c];
      color_[best] = 0;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_ = 0;
  std::vector<int> color_;
  std::vector<std::vector<int>> sat_;
  NodeCounter counter_;
};

}  // namespace detail

/// Optimal coloring by iterative deepening from the clique number.
/// Oracle use only: at most 24 vertices.
inline Coloring chromatic_number_exact(const Graph& g,
                                       SearchBudget budget = SearchBudget::from_env()) {
  if (g.size() > kMaxExactVertices)
    throw SizeGuard("chromatic_number_exact accepts at most " +
                    std::to_string(kMaxExactVertices) + " vertices");
  Coloring out;
  if (g.size() == 0) return out;
  detail::ExactColoring search(g, budget);
  for (int k = std::max(1, clique_number(g, budget).omega);; ++k) {
    if (search.try_k(k)) {
      out.color = search.colors();
      out.k = k;
      return out;
    }
  }
}

/// ceil(num * w / den) for non-negative w.
inline int ceil_ratio(int num, int den, int w) { return (num * w + den - 1) / den; }

enum class BoundKind { ElevenNinths, SevenSixths, SevenSixthsPlusOne, Exact };

inline std::string to_string(BoundKind b) {
  switch (b) {
    case BoundKind::ElevenNinths: return "eleven_ninths";
    case BoundKind::SevenSixths: return "seven_sixths";
    case BoundKind::SevenSixthsPlusOne: return "seven_sixths_plus_one";
    case BoundKind::Exact: return "exact";
  }
  return "?";
}

struct ColorBudget {
  int omega = 0;
  BoundKind kind = BoundKind::ElevenNinths;
  int budget = 0;

  static ColorBudget eleven_ninths(int w) { return {w, BoundKind::ElevenNinths, ceil_ratio(11, 9, w)}; }
  static ColorBudget seven_sixths(int w) { return {w, BoundKind::SevenSixths, ceil_ratio(7, 6, w)}; }
  static ColorBudget seven_sixths_plus_one(int w) {
    return {w, BoundKind::SevenSixthsPlusOne, ceil_ratio(7, 6, w) + 1};
  }
  static ColorBudget exact(int w, int chi) { return {w, BoundKind::Exact, chi}; }
};

}  // namespace chroma

#endif  // CHROMA_ORACLE_COLORING_HPP
