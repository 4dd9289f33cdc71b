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

#ifndef CHROMA_ORACLE_CLIQUE_HPP
#define CHROMA_ORACLE_CLIQUE_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Node limit shared by the exponential searches.
struct SearchBudget {
  std::int64_t max_nodes = 20'000'000;

  /// Default budget, overridden by CHROMA_NODE_BUDGET when set.
  static SearchBudget from_env() {
    SearchBudget b;
    if (const char* s = std::getenv("CHROMA_NODE_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end != s && v > 0) b.max_nodes = v;
    }
    return b;
  }
};

/// Counts search nodes and throws once the budget is spent.
class NodeCounter {
 public:
  NodeCounter(SearchBudget b, const char* what) : budget_(b), what_(what) {}
  void tick() {
    if (++nodes_ > budget_.max_nodes)
      throw BudgetExceeded(std::string(what_) + ": node budget of " +
                           std::to_string(budget_.max_nodes) + " exhausted");
  }
  std::int64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  const char* what_;
  std::int64_t nodes_ = 0;
};

inline constexpr int kEnumerateCliquesUpTo = 64;

struct CliqueReport {
  int omega = 0;
  std::vector<int> witness;
  /// Every maximum clique, filled when the graph has at most 64 vertices.
  std::vector<std::vector<int>> all_maximum_cliques;
  bool enumerated = false;
};

namespace detail {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, bool enumerate, SearchBudget b)
      : g_(g), enumerate_(enumerate), counter_(b, "clique_number") {}

  void run() {
    VertexSet p = g_.all();
    VertexSet x(g_.size());
    std::vector<int> r;
    expand(r, p, x);
  }

  int best = 0;
  std::vector<int> witness;
  std::vector<std::vector<int>> maximum;

 private:
  // Bron-Kerbosch with Tomita pivoting; cut when R+P cannot reach the best.
  void expand(std::vector<int>& r, VertexSet p, VertexSet x) {
    counter_.tick();
    const int bound = static_cast<int>(r.size()) + p.count();
    if (enumerate_ ? bound < best : bound <= best) return;
    if (p.empty()) {
      if (!x.empty()) return;
      const int size = static_cast<int>(r.size());
      if (size > best) {
        best = size;
        witness = r;
        maximum.clear();
      }
      if (enumerate_ && size == best) maximum.push_back(r);
      return;
    }
    int pivot = -1, pivot_hits = -1;
    (p | x).for_each([&](int u) {
      int hits = (p & g_.neighbors(u)).count();
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    });
    VertexSet cand = p;
    cand.subtract(g_.neighbors(pivot));
    for (int v : cand.to_vector()) {
      r.push_back(v);
      expand(r, p & g_.neighbors(v), x & g_.neighbors(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const Graph& g_;
  bool enumerate_;
  NodeCounter counter_;
};

}  // namespace detail

/// Exact clique number with a witness; enumerates all maximum cliques (each
/// sorted ascending, in discovery order) when n <= 64.
inline CliqueReport clique_number(const Graph& g,
                                  SearchBudget budget = SearchBudget::from_env()) {
  const bool enumerate = g.size() <= kEnumerateCliquesUpTo;
  detail::CliqueSearch s(g, enumerate, budget);
  s.run();
  CliqueReport rep;
  rep.omega = s.best;
  rep.witness = s.witness;
  std::sort(rep.witness.begin(), rep.witness.end());
  rep.enumerated = enumerate;
  for (auto& c : s.maximum) {
    std::sort(c.begin(), c.end());
    rep.all_maximum_cliques.push_back(std::move(c));
  }
  std::sort(rep.all_maximum_cliques.begin(), rep.all_maximum_cliques.end());
  return rep;
}

}  // namespace chroma

#endif  // CHROMA_ORACLE_CLIQUE_HPP
