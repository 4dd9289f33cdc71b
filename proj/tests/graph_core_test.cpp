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

#include <random>

#include <gtest/gtest.h>

#include "chroma/chroma.hpp"

using namespace chroma;

namespace {

// Induced subgraph on `vs` is a cycle (every degree 2, connected) or a path.
bool induces_shape(const Graph& g, const std::vector<int>& vs, bool cycle) {
  const int k = static_cast<int>(vs.size());
  int ones = 0;
  for (int a : vs) {
    int d = 0;
    for (int b : vs) d += a != b && g.adjacent(a, b);
    if (d == 1) ++ones;
    else if (d != 2) return false;
  }
  if (ones != (cycle ? 0 : 2)) return false;
  std::vector<int> seen{vs[0]};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (int b : vs)
      if (g.adjacent(seen[i], b) && std::find(seen.begin(), seen.end(), b) == seen.end())
        seen.push_back(b);
  return static_cast<int>(seen.size()) == k;
}

bool brute_contains(const Graph& g, int k, bool cycle) {
  const int n = g.size();
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) return induces_shape(g, pick, cycle);
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution e(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (e(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(Graph, EdgesAndComplement) {
  Graph g = cycle_graph(5);
  EXPECT_EQ(g.edges().size(), 5u);
  EXPECT_EQ(complement(g).edges().size(), 5u);
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(components(disjoint_union(cycle_graph(3), path_graph(2))).size(), 2u);
}

TEST(Graph, InducedSubgraphKeepsOrder) {
  Graph g = path_graph(5);
  std::vector<int> vs{1, 2, 4};
  Graph h = induced_subgraph(g, std::span<const int>(vs));
  EXPECT_EQ(h.size(), 3);
  EXPECT_TRUE(h.adjacent(0, 1));
  EXPECT_FALSE(h.adjacent(1, 2));
}

TEST(Freeness, C7IsFree) { EXPECT_TRUE(check_freeness(cycle_graph(7)).is_free); }

TEST(Freeness, C4HasWitness) {
  const auto r = check_freeness(cycle_graph(4));
  ASSERT_FALSE(r.is_free);
  EXPECT_EQ(*r.kind, Forbidden::C4);
  EXPECT_EQ(r.witness.size(), 4u);
  EXPECT_TRUE(verify_witness(cycle_graph(4), r));
}

TEST(Freeness, EmeraldIsFree) { EXPECT_TRUE(check_freeness(emerald()).is_free); }

TEST(Freeness, C5AndP7) {
  EXPECT_EQ(*check_freeness(cycle_graph(5)).kind, Forbidden::C5);
  EXPECT_EQ(*check_freeness(path_graph(7)).kind, Forbidden::P7);
  EXPECT_TRUE(check_freeness(path_graph(6)).is_free);
  EXPECT_EQ(*check_freeness(cycle_graph(8)).kind, Forbidden::P7);
}

TEST(Freeness, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const int n = 4 + it % 6;
    const Graph g = random_graph(n, it % 3 == 0 ? 0.3 : 0.5, rng);
    const bool bad = brute_contains(g, 4, true) || brute_contains(g, 5, true) ||
                     brute_contains(g, 7, false);
    const auto r = check_freeness(g);
    ASSERT_EQ(r.is_free, !bad) << to_dimacs(g);
    if (!r.is_free) EXPECT_TRUE(verify_witness(g, r));
  }
}

TEST(Twins, C7K3Quotient) {
  const Graph g = blowup_graph(cycle_graph(7), std::vector<int>(7, 3));
  EXPECT_EQ(g.size(), 21);
  const auto q = quotient_by_true_twins(g);
  EXPECT_TRUE(is_isomorphic_small(q.base, cycle_graph(7)).has_value());
  EXPECT_EQ(q.weights, std::vector<int>(7, 3));
}

TEST(Twins, EmeraldHasNoTwins) {
  const auto q = quotient_by_true_twins(emerald());
  EXPECT_EQ(q.base.size(), 11);
  EXPECT_EQ(q.weights, std::vector<int>(11, 1));
}

TEST(Twins, EK2RoundTrip) {
  const auto q = quotient_by_true_twins(blowup_graph(emerald(), std::vector<int>(11, 2)));
  EXPECT_TRUE(is_isomorphic_small(q.base, emerald()).has_value());
  EXPECT_EQ(q.weights, std::vector<int>(11, 2));
}

TEST(Isomorphism, C7Relabeled) {
  Graph g(7);
  const int perm[7] = {3, 0, 5, 1, 6, 2, 4};
  for (int i = 0; i < 7; ++i) g.add_edge(perm[i], perm[(i + 1) % 7]);
  auto f = is_isomorphic_small(cycle_graph(7), g);
  ASSERT_TRUE(f.has_value());
  for (auto [u, v] : cycle_graph(7).edges()) EXPECT_TRUE(g.adjacent((*f)[u], (*f)[v]));
}

TEST(Isomorphism, EmeraldVsEMinus8PlusIsolated) {
  EXPECT_FALSE(is_isomorphic_small(emerald(), disjoint_union(e_minus_8_base(), Graph(1))));
}

// H = E-8; H-5 has two true twins and its quotient is C7+v.
TEST(Isomorphism, HMinus5IsC7PlusV) {
  VertexSet rm(11);
  rm.set(4);
  rm.set(7);
  const Graph h5 = remove_vertices(emerald(), rm);
  EXPECT_EQ(h5.size(), 9);
  const auto q = quotient_by_true_twins(h5);
  EXPECT_TRUE(is_isomorphic_small(q.base, c7_plus_v_base()).has_value());
  EXPECT_TRUE(find_induced_embedding(c7_plus_v_base(), h5).has_value());
}

TEST(Isomorphism, EmeraldAutomorphismsPreserveEdges) {
  const auto autos = automorphisms(emerald());
  EXPECT_GE(autos.size(), 2u);
  for (const auto& a : autos)
    for (auto [u, v] : emerald().edges()) EXPECT_TRUE(emerald().adjacent(a[u], a[v]));
}

TEST(Dimacs, RoundTrip) {
  const Graph g = emerald();
  const Graph h = parse_dimacs(to_dimacs(g)).graph;
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
  try {
    parse_dimacs("c x\np edge 3 1\ne 1 9\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_dimacs("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs(""), ParseError);
}
