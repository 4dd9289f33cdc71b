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

#include <gtest/gtest.h>

#include "chroma/chroma.hpp"

using namespace chroma;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

bool has_rule(const std::vector<BraceletViolation>& v, const std::string& needle) {
  for (const auto& x : v)
    if (x.rule.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Catalog, EmeraldAdjacency) {
  const Graph& e = emerald();
  EXPECT_EQ(e.size(), 11);
  for (int v = 0; v < 11; ++v) EXPECT_EQ(e.degree(v), 4);
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(e.adjacent(i, (i + 1) % 6));
  const std::vector<std::vector<int>> n{{7, 1, 6, 8, 11}, {8, 1, 2, 7, 9}, {9, 2, 3, 8, 10},
                                        {10, 3, 4, 5, 9}, {11, 4, 5, 6, 7}};
  for (const auto& row : n)
    for (std::size_t k = 1; k < row.size(); ++k)
      EXPECT_TRUE(e.adjacent(row[0] - 1, row[k] - 1)) << row[0] << "~" << row[k];
  EXPECT_EQ(e.label(7), "8");
}

TEST(Catalog, BasesAreInClass) {
  for (const auto& name : base_names())
    EXPECT_TRUE(check_freeness(base_by_name(name)).is_free) << name;
  EXPECT_THROW(base_by_name("nope"), InvalidInput);
}

TEST(Blowup, Realize) {
  EXPECT_TRUE(is_isomorphic_small(realize(BlowupSpec::named("c7", std::vector<int>(7, 1))).graph,
                                  cycle_graph(7)));
  const auto r = realize(BlowupSpec::named("emerald", std::vector<int>(11, 2)));
  EXPECT_EQ(r.graph.size(), 22);
  EXPECT_EQ(clique_number(r.graph).omega, 6);
  EXPECT_THROW(BlowupSpec::named("c7", {1, 2}), InvalidInput);
  EXPECT_THROW(BlowupSpec::named("c7", {1, 1, 1, 1, 1, 1, -1}), InvalidInput);
}

TEST(Blowup, PValue) {
  EXPECT_EQ(p_value(BlowupSpec::named("emerald", std::vector<int>(11, 3))), 3);
  EXPECT_EQ(p_value(BlowupSpec::named("emerald", {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2})), 1);
  EXPECT_EQ(p_value(BlowupSpec::named("emerald", std::vector<int>(11, 0))), 0);
}

TEST(Recognize, EK2) {
  const auto s = recognize_emerald_blowup(blowup_graph(emerald(), std::vector<int>(11, 2)));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->weights, std::vector<int>(11, 2));
}

TEST(Recognize, C7K3LandsOnASevenCycle) {
  const auto r = recognize_emerald_blowup_mapped(blowup_graph(cycle_graph(7), std::vector<int>(7, 3)));
  ASSERT_TRUE(r.has_value());
  std::vector<int> support;
  for (int v = 0; v < 11; ++v)
    if (r->spec.weights[v] > 0) {
      EXPECT_EQ(r->spec.weights[v], 3);
      support.push_back(v);
    }
  ASSERT_EQ(support.size(), 7u);
  EXPECT_TRUE(is_isomorphic_small(induced_subgraph(emerald(), std::span<const int>(support)),
                                  cycle_graph(7)));
}

TEST(Recognize, PetersenAbsent) {
  EXPECT_FALSE(recognize_emerald_blowup(petersen()).has_value());
}

TEST(Bracelet, SingletonsRealizeC7) {
  const auto s = BraceletSpec::singletons();
  EXPECT_TRUE(validate_bracelet(s).empty());
  EXPECT_TRUE(is_isomorphic_small(realize(s).graph, cycle_graph(7)));
}

TEST(Bracelet, SignedPartNeedsPartner) {
  auto s = BraceletSpec::singletons();
  s.size[A7_0] = 0;
  s.size[A7_plus] = 1;
  EXPECT_TRUE(has_rule(validate_bracelet(s), "A₇⁺ nonempty requires A₂⁻ nonempty"));
}

TEST(Bracelet, CrossingRelationGivesC4) {
  auto s = BraceletSpec::singletons();
  s.size[A7_0] = 0;
  s.size[A7_plus] = 2;
  s.size[A2_0] = 0;
  s.size[A2_minus] = 2;
  s.e72 = {{0, 0}, {1, 1}};
  const auto v = validate_bracelet(s);
  ASSERT_TRUE(has_rule(v, "induced C4"));
  EXPECT_EQ(v.back().witness.size(), 4u);
  EXPECT_TRUE(verify_witness(realize(s).graph,
                             FreenessReport{false, Forbidden::C4, v.back().witness}));
}

TEST(Bracelet, NestedRelationIsValid) {
  auto s = BraceletSpec::plain(2);
  s.size[A7_0] = 0;
  s.size[A7_plus] = 2;
  s.size[A2_0] = 0;
  s.size[A2_minus] = 2;
  s.e72 = {{0, 0}, {0, 1}, {1, 0}};
  EXPECT_TRUE(validate_bracelet(s).empty());
  s.e72.push_back({0, 0});
  EXPECT_TRUE(has_rule(validate_bracelet(s), "duplicate"));
}

TEST(Bracelet, EmptyBagAndRanges) {
  auto s = BraceletSpec::singletons();
  s.size[A4] = 0;
  EXPECT_TRUE(has_rule(validate_bracelet(s), "bag A4 is empty"));
  auto t = BraceletSpec::singletons();
  t.e13 = {{0, 0}};
  EXPECT_TRUE(has_rule(validate_bracelet(t), "out of range"));
}

TEST(Bracelet, NormalizeMovesIsolatedSignedVertices) {
  auto s = BraceletSpec::plain(2);
  s.size[A7_0] = 0;
  s.size[A7_plus] = 2;
  s.size[A2_0] = 0;
  s.size[A2_minus] = 2;
  s.e72 = {{0, 0}};
  std::vector<int> old_of_new;
  const auto n = normalize(s, &old_of_new);
  EXPECT_EQ(n.size[A7_plus], 1);
  EXPECT_EQ(n.size[A2_minus], 1);
  EXPECT_EQ(n.bag(7), 2);
  EXPECT_TRUE(validate_bracelet(n).empty());
  const Graph a = realize(n).graph, b = realize(s).graph;
  ASSERT_EQ(a.size(), b.size());
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v)
      if (u != v) EXPECT_EQ(a.adjacent(u, v), b.adjacent(old_of_new[u], old_of_new[v]));
}

TEST(Json, BlowupRoundTripSortedKeys) {
  const auto s = BlowupSpec::named("c7v", {1, 2, 3, 4, 5, 6, 7, 8});
  const Json j = spec_to_json(s);
  EXPECT_EQ(j.dump(),
            R"({"base":"c7v","kind":"blowup","weights":{"1":1,"2":2,"3":3,"4":4,"5":5,"6":6,"7":7,"v":8}})");
  const auto back = std::get<BlowupSpec>(spec_from_json(j));
  EXPECT_EQ(back.weights, s.weights);
  EXPECT_EQ(back.base_name, "c7v");
}

TEST(Json, BraceletRoundTrip) {
  auto s = BraceletSpec::plain(2);
  s.size[A7_0] = 0;
  s.size[A7_plus] = 2;
  s.size[A2_0] = 0;
  s.size[A2_minus] = 2;
  s.e72 = {{0, 0}, {0, 1}, {1, 0}};
  const auto back = std::get<BraceletSpec>(parse_spec(spec_to_json(s).dump()));
  EXPECT_TRUE(back == s);
}

TEST(Json, Rejects) {
  EXPECT_THROW(parse_spec("{"), InvalidInput);
  EXPECT_THROW(parse_spec(R"({"kind":"tree"})"), InvalidInput);
  EXPECT_THROW(parse_spec(R"({"kind":"blowup","base":"c7","weights":{"1":1}})"), InvalidInput);
  EXPECT_THROW(parse_spec(R"({"kind":"blowup","base":"c7","weights":{"x":1}})"), InvalidInput);
  EXPECT_THROW(parse_spec(R"({"kind":"bracelet","bags":{"A9":1}})"), InvalidInput);
  EXPECT_THROW(parse_spec(R"({"kind":"bracelet","bags":{"A4":-1}})"), InvalidInput);
  EXPECT_THROW(parse_spec(R"({"kind":"bracelet","bags":{},"cross":{"e99":[]}})"), InvalidInput);
}
