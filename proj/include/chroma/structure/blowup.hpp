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

#ifndef CHROMA_STRUCTURE_BLOWUP_HPP
#define CHROMA_STRUCTURE_BLOWUP_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/isomorphism.hpp"
#include "chroma/structure/catalog.hpp"
#include "chroma/twins.hpp"

namespace chroma {

/// Base graph with a clique size per base vertex.
struct BlowupSpec {
  std::string base_name;  // catalog name used for serialization
  Graph base;
  std::vector<int> weights;

  static BlowupSpec named(const std::string& name, std::vector<int> weights) {
    BlowupSpec s{name, base_by_name(name), std::move(weights)};
    s.validate();
    return s;
  }

  void validate() const {
    if (static_cast<int>(weights.size()) != base.size())
      throw InvalidInput("blowup spec: " + std::to_string(weights.size()) +
                         " weights for a base of " + std::to_string(base.size()));
    for (int w : weights)
      if (w < 0) throw InvalidInput("blowup spec: negative weight");
  }

  int weight(std::string_view label) const { return weights[role(base, label)]; }
  int total() const {
    int s = 0;
    for (int w : weights) s += w;
    return s;
  }
};

struct BlowupRealization {
  Graph graph;
  std::vector<int> bag_of;             // realized vertex -> base vertex
  std::vector<std::vector<int>> bags;  // base vertex -> realized vertices
};

/// Bags are numbered consecutively in base order.
inline BlowupRealization realize(const BlowupSpec& spec) {
  spec.validate();
  BlowupRealization r;
  r.graph = blowup_graph(spec.base, spec.weights, &r.bag_of);
  r.bags.assign(spec.base.size(), {});
  for (int v = 0; v < static_cast<int>(r.bag_of.size()); ++v)
    r.bags[r.bag_of[v]].push_back(v);
  return r;
}

/// Minimum bag size of an emerald blowup.
inline int p_value(const BlowupSpec& spec) {
  if (!(spec.base == emerald()))
    throw InvalidInput("p_value needs the emerald as base");
  return *std::min_element(spec.weights.begin(), spec.weights.end());
}

struct RecognizedBlowup {
  BlowupSpec spec;            // over the emerald
  std::vector<int> bag_of;    // vertex of g -> emerald vertex
};

/// Embeds the true-twin quotient of g into the emerald (first embedding in
/// lexicographic order); missing emerald vertices get weight 0.
inline std::optional<RecognizedBlowup> recognize_emerald_blowup_mapped(const Graph& g) {
  TwinQuotient q = quotient_by_true_twins(g);
  if (q.base.size() > emerald().size()) return std::nullopt;
  auto emb = find_induced_embedding(q.base, emerald());
  if (!emb) return std::nullopt;
  RecognizedBlowup r;
  r.spec = BlowupSpec{"emerald", emerald(), std::vector<int>(11, 0)};
  for (int c = 0; c < q.base.size(); ++c) r.spec.weights[(*emb)[c]] = q.weights[c];
  r.bag_of.resize(g.size());
  for (int v = 0; v < g.size(); ++v) r.bag_of[v] = (*emb)[q.class_of[v]];
  return r;
}

inline std::optional<BlowupSpec> recognize_emerald_blowup(const Graph& g) {
  auto r = recognize_emerald_blowup_mapped(g);
  if (!r) return std::nullopt;
  return r->spec;
}

}  // namespace chroma

#endif  // CHROMA_STRUCTURE_BLOWUP_HPP
