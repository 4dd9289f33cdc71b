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

#ifndef CHROMA_GRAPH_HPP
#define CHROMA_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A search ran out of its node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An oracle was called on an instance larger than it accepts.
class SizeGuard : public Error {
 public:
  using Error::Error;
};

/// A construction failed a property its correctness argument guarantees.
/// Seeing one of these is a bug, never a recoverable condition.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fixed-size dynamic bitset over vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
  void set(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }
  std::span<const std::uint64_t> words() const { return words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(n, VertexSet(n)) {
    if (n < 0) throw InvalidInput("negative vertex count");
  }
  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int size() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("self-loop on vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }
  void remove_edge(int u, int v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
  }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }

  const VertexSet& neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighbors(int v) const {
    VertexSet s = rows_[v];
    s.set(v);
    return s;
  }
  int degree(int v) const { return rows_[v].count(); }

  int edge_count() const {
    int m = 0;
    for (const auto& r : rows_) m += r.count();
    return m / 2;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      rows_[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  VertexSet all() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
      throw InvalidInput("label count does not match vertex count");
    labels_ = std::move(labels);
  }
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

/// Subgraph induced by `vertices`, renumbered in the given order.
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : vertices) labels.push_back(g.label(v));
    h.set_labels(std::move(labels));
  }
  return h;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  auto v = vertices.to_vector();
  return induced_subgraph(g, std::span<const int>(v));
}

/// g minus `removed`, with the surviving vertices listed in `kept`.
inline Graph remove_vertices(const Graph& g, const VertexSet& removed,
                             std::vector<int>* kept = nullptr) {
  std::vector<int> keep;
  for (int v = 0; v < g.size(); ++v)
    if (!removed.test(v)) keep.push_back(v);
  if (kept) *kept = keep;
  return induced_subgraph(g, std::span<const int>(keep));
}

inline Graph complement(const Graph& g) {
  Graph h(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

/// Connected components of g[within], each sorted ascending; components are
/// ordered by their smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g,
                                                const VertexSet& within) {
  std::vector<std::vector<int>> out;
  VertexSet left = within;
  while (!left.empty()) {
    int s = left.first();
    VertexSet comp(g.size());
    comp.set(s);
    left.reset(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(v) & left;
      nb.for_each([&](int u) {
        left.reset(u);
        comp.set(u);
        stack.push_back(u);
      });
    }
    out.push_back(comp.to_vector());
  }
  return out;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  return components(g, g.all());
}

inline bool is_clique(const Graph& g, std::span<const int> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline bool is_stable(const Graph& g, std::span<const int> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Disjoint union; vertices of b are shifted by a.size().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.size() + b.size());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.size(), v + a.size());
  return g;
}

}  // namespace chroma

#endif  // CHROMA_GRAPH_HPP
