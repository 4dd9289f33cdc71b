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

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "chroma/chroma.hpp"

using namespace chroma;

namespace {

// Weight vector over `base` from (label, weight) pairs; others get `rest`.
std::vector<int> by_label(const Graph& base, std::map<std::string, int> w, int rest = 0) {
  std::vector<int> out(base.size(), rest);
  for (const auto& [l, x] : w) out[role(base, l)] = x;
  return out;
}

int omega_of_graph(const Graph& g) { return clique_number(g).omega; }

// Proper, and within `budget`. Returns the color count.
int check(const Graph& g, const Coloring& c, int budget) {
  EXPECT_TRUE(verify_coloring(g, c).proper);
  EXPECT_LE(c.k, budget);
  return c.k;
}

int blowup_chi(const BlowupSpec& s) { return blowup_chromatic_exact(s.base, s.weights).size; }

BraceletSpec with_pair(BraceletSpec s, const CrossInfo& cr, int a, int b, CrossRelation rel) {
  s.size[zero_part(cr.left)] -= a;
  s.size[cr.left] = a;
  s.size[zero_part(cr.right)] -= b;
  s.size[cr.right] = b;
  s.*cr.rel = std::move(rel);
  return s;
}

}  // namespace

// ---- C7 family ---------------------------------------------------------------

TEST(C7Equal, ExactCounts) {
  EXPECT_EQ(color_c7_equal(1).k, 3);
  EXPECT_EQ(color_c7_equal(3).k, 7);
  for (int t = 1; t <= 9; ++t) {
    const auto spec = BlowupSpec::named("c7", std::vector<int>(7, t));
    const Coloring c = color_c7_equal(t);
    EXPECT_TRUE(verify_coloring(realize(spec).graph, c).proper);
    EXPECT_EQ(c.k, (7 * t + 2) / 3);
    EXPECT_EQ(c.k, blowup_chi(spec)) << t;
  }
}

TEST(C7PlusV, Examples) {
  const Graph& b = c7_plus_v_base();
  auto all1 = BlowupSpec::named("c7v", std::vector<int>(8, 1));
  const Graph g1 = realize(all1).graph;
  EXPECT_EQ(omega_of_graph(g1), 3);
  check(g1, color_c7_plus_v(all1), 4);

  auto hole = BlowupSpec::named("c7v", by_label(b, {{"2", 0}}, 2));
  const Graph gh = realize(hole).graph;
  EXPECT_EQ(color_c7_plus_v(hole).k, omega_of_graph(gh));

  auto all3 = BlowupSpec::named("c7v", std::vector<int>(8, 3));
  const Graph g3 = realize(all3).graph;
  EXPECT_EQ(omega_of_graph(g3), 9);
  check(g3, color_c7_plus_v(all3), 11);
}

TEST(C7Plus2T, Examples) {
  const Graph& b = c7_plus_2t_base();
  // x1 on {1,3,4,5,6}, x2 on {7,t2}, x3 on {2,t7}.
  auto pattern = [&](int x2, int x3) {
    const int x1 = x2 + x3;
    return BlowupSpec::named("c7_2t", by_label(b, {{"1", x1}, {"3", x1}, {"4", x1}, {"5", x1},
                                                   {"6", x1}, {"7", x2}, {"t2", x2},
                                                   {"2", x3}, {"t7", x3}}));
  };
  const auto s11 = pattern(1, 1);
  const Graph g11 = realize(s11).graph;
  EXPECT_EQ(omega_of_graph(g11), 4);
  EXPECT_EQ(color_c7_plus_2t(s11).k, 5);
  EXPECT_EQ(blowup_chi(s11), 5);

  const auto s21 = pattern(2, 1);
  const Graph g21 = realize(s21).graph;
  EXPECT_EQ(omega_of_graph(g21), 6);
  EXPECT_LE(blowup_chi(s21), check(g21, color_c7_plus_2t(s21), 7));

  auto no_t2 = BlowupSpec::named("c7_2t", by_label(b, {{"t2", 0}}, 2));
  const Graph gz = realize(no_t2).graph;
  check(gz, color_c7_plus_2t(no_t2), seven_sixths(omega_of_graph(gz)));
}

TEST(C7Plus2F, RandomWeightsWithinBound) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 60; ++it) {
    std::vector<int> w(9);
    for (int& x : w) x = std::uniform_int_distribution<int>(0, 5)(rng);
    const auto s = BlowupSpec::named("c7_2f", w);
    const Graph g = realize(s).graph;
    const int k = check(g, color_c7_plus_2f(s), seven_sixths(omega_of_graph(g)));
    EXPECT_LE(blowup_chi(s), k);
  }
}

TEST(EMinus8, Examples) {
  const Graph& b = e_minus_8_base();
  auto all1 = BlowupSpec::named("e_minus_8", std::vector<int>(10, 1));
  const Graph g1 = realize(all1).graph;
  EXPECT_EQ(omega_of_graph(g1), 3);
  EXPECT_LE(chromatic_number_exact(g1).k, check(g1, color_e_minus_8(all1), 4));

  auto no5 = BlowupSpec::named("e_minus_8", by_label(b, {{"5", 0}}, 2));
  const Graph g5 = realize(no5).graph;
  check(g5, color_e_minus_8(no5), seven_sixths(omega_of_graph(g5)));

  // x1 on {1,2,10,11}, x2 on {4,6,9}, x3 on {3,5,7}.
  auto fig = BlowupSpec::named("e_minus_8", by_label(b, {{"1", 2}, {"2", 2}, {"10", 2}, {"11", 2},
                                                         {"4", 1}, {"6", 1}, {"9", 1},
                                                         {"3", 1}, {"5", 1}, {"7", 1}}));
  const Graph gf = realize(fig).graph;
  EXPECT_EQ(omega_of_graph(gf), 4);
  EXPECT_LE(blowup_chi(fig), check(gf, color_e_minus_8(fig), 5));
}

TEST(EMinus8, LightCliqueFallsBackToExact) {
  // No strong stable set, but {5,6,11} is not a maximum clique.
  std::mt19937_64 rng(8);
  for (int it = 0; it < 80; ++it) {
    std::vector<int> w(10);
    for (int& x : w) x = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto s = BlowupSpec::named("e_minus_8", w);
    const Graph g = realize(s).graph;
    const int k = check(g, color_e_minus_8(s), seven_sixths(omega_of_graph(g)));
    EXPECT_LE(blowup_chi(s), k);
  }
}

TEST(Gx, Examples) {
  const Graph& b = c7_plus_2t_base();
  auto gx = [&](int x, int l7, int lt2) {
    std::map<std::string, int> w{{"1", x}, {"3", x}, {"4", x}, {"5", x}, {"6", x}};
    w["7"] = l7;
    w["t7"] = x + 2 - l7;
    w["t2"] = lt2;
    w["2"] = x + 2 - lt2;
    return BlowupSpec::named("gx", by_label(b, w));
  };
  const auto s1 = gx(1, 2, 1);
  const Graph g1 = realize(s1).graph;
  EXPECT_EQ(g1.size(), 11);
  EXPECT_LE(blowup_chi(s1), check(g1, color_gx(s1), 4));

  const auto s6 = gx(6, 4, 3);
  check(realize(s6).graph, color_gx(s6), 16);

  const auto s7 = gx(7, 4, 4);
  check(realize(s7).graph, color_gx(s7), 18);
  EXPECT_THROW(color_gx(BlowupSpec::named("gx", std::vector<int>(9, 1))), InvalidInput);
}

// ---- Emerald -------------------------------------------------------------------

TEST(Emerald, StableSystem) {
  const auto& sys = ek3_stable_system();
  ASSERT_EQ(sys.size(), 11u);
  EXPECT_EQ(sys[0], (std::vector<int>{1, 3, 5}));
  std::vector<int> mult(12, 0);
  for (const auto& t : sys) {
    std::vector<int> idx;
    for (int l : t) idx.push_back(l - 1);
    EXPECT_TRUE(is_stable(emerald(), idx));
    for (int l : t) ++mult[l];
  }
  for (int l = 1; l <= 11; ++l) EXPECT_EQ(mult[l], 3) << l;
}

TEST(Emerald, PaperConstants) {
  auto spec = [](int t) { return BlowupSpec::named("emerald", std::vector<int>(11, t)); };
  EXPECT_EQ(color_emerald_p_le_2(spec(1)).k, 4);
  EXPECT_EQ(color_emerald_p_le_2(spec(2)).k, 8);
  EXPECT_EQ(color_emerald_p_ge_3(spec(3)).k, 11);
  EXPECT_EQ(blowup_chi(spec(2)), 8);
  const auto s6 = spec(6);
  EXPECT_EQ(omega_of(emerald(), s6.weights), 18);
  EXPECT_EQ(color_emerald_p_ge_3(s6).k, 22);
  EXPECT_EQ(blowup_chi(s6), 22);
  EXPECT_THROW(color_emerald_p_ge_3(spec(2)), InvalidInput);
  EXPECT_THROW(color_emerald_p_le_2(spec(3)), InvalidInput);
}

TEST(Emerald, ThreesWithOneFour) {
  for (int v = 0; v < 11; ++v) {
    std::vector<int> w(11, 3);
    w[v] = 4;
    const auto s = BlowupSpec::named("emerald", w);
    const Graph g = realize(s).graph;
    EXPECT_LE(blowup_chi(s), check(g, color_emerald_p_ge_3(s), eleven_ninths(omega_of_graph(g))));
  }
}

TEST(Emerald, PAtMostTwoAgainstExact) {
  std::mt19937_64 rng(4);
  int omega10 = 0;
  for (int it = 0; it < 150; ++it) {
    std::vector<int> w(11);
    for (int& x : w) x = std::uniform_int_distribution<int>(2, 5)(rng);
    w[it % 11] = 1 + it % 2;
    const auto s = BlowupSpec::named("emerald", w);
    const int omega = omega_of(emerald(), w);
    omega10 += omega == 10;
    const Coloring c = color_emerald_p_le_2(s);
    EXPECT_LE(blowup_chi(s), check(realize(s).graph, c, eleven_ninths(omega)));
  }
  EXPECT_GT(omega10, 0);
}

TEST(Emerald, RandomAgainstBudget) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> w(11);
    for (int& x : w) x = std::uniform_int_distribution<int>(0, 9)(rng);
    const auto s = BlowupSpec::named("emerald", w);
    check(realize(s).graph, color_emerald(s), emerald_budget(w));
  }
}

TEST(Emerald, SpecialFamily) {
  for (int x = 1; x <= 10; ++x)
    for (int y = 0; y <= x + 2; ++y)
      for (int r = 0; r <= y; r += 2)
        for (int sv = 0; sv <= x + 2 - y; sv += 2) {
          GenConfig c;
          c.family = "special_emerald";
          c.x = x;
          c.y = y;
          c.r = r;
          c.s = sv;
          c.p = 1 + x % 3;
          const auto spec = std::get<BlowupSpec>(gen(c));
          check(realize(spec).graph, color_emerald(spec), emerald_budget(spec.weights));
        }
}

// ---- Bracelets -----------------------------------------------------------------

TEST(BraceletOnePair, Examples) {
  EXPECT_EQ(color_bracelet_one_pair(BraceletSpec::singletons(), 1).k, 3);

  const auto s3 = with_pair(BraceletSpec::plain(3), kCross[0], 1, 1, {{0, 0}});
  const Graph g3 = realize(s3).graph;
  EXPECT_EQ(g3.size(), 21);
  EXPECT_LE(chromatic_number_exact(g3).k, check(g3, color_bracelet_one_pair(s3, 3), 7));

  // Full bags on both sides force a cross clique of at least 3.
  const auto full = with_pair(BraceletSpec::plain(2), kCross[0], 2, 2, {{0, 0}, {0, 1}, {1, 0}});
  const Graph gf = realize(full).graph;
  EXPECT_TRUE(validate_bracelet(full).empty());
  EXPECT_THROW(color_bracelet_one_pair(full, 2), InvalidInput);
  EXPECT_THROW(gen_cross_pattern(2, 2, 2, 1), InvalidInput);
  const auto ok = with_pair(BraceletSpec::plain(2), kCross[0], 2, 1, {{0, 0}});
  const Graph go = realize(ok).graph;
  EXPECT_LE(chromatic_number_exact(go).k, check(go, color_bracelet_one_pair(ok, 2), 5));
}

TEST(BraceletOnePair, NoSharedColorAcrossAdjacentBags) {
  for (int x = 2; x <= 6; ++x)
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const int a = 1 + static_cast<int>(seed) % x, b = 1 + static_cast<int>(seed * 7) % x;
      if (std::max(a, b) + 1 > x) continue;
      const auto s = with_pair(BraceletSpec::plain(x), kCross[0], a, b,
                               gen_cross_pattern(a, b, x, seed));
      ASSERT_TRUE(validate_bracelet(s).empty());
      const auto r = realize(s);
      const Coloring c = color_bracelet_one_pair(s, x);
      check(r.graph, c, ceil_ratio(7, 6, 2 * x));
      for (int i = 1; i <= 7; ++i) {
        const int j = i % 7 + 1;
        for (int u : r.bags[i])
          for (int v : r.bags[j])
            if (r.graph.adjacent(u, v)) EXPECT_NE(c.color[u], c.color[v]);
      }
    }
}

TEST(BraceletEqual, Examples) {
  const Coloring c3 = color_bracelet_equal(BraceletSpec::plain(3), 3);
  EXPECT_EQ(c3.k, 7);
  EXPECT_EQ(c3.k, color_c7_equal(3).k);

  const auto one = with_pair(BraceletSpec::plain(3), kCross[0], 2, 1, {{0, 0}, {1, 0}});
  check(realize(one).graph, color_bracelet_equal(one, 3), 7);

  BraceletSpec all = BraceletSpec::plain(4);
  all = with_pair(all, kCross[0], 2, 2, gen_cross_pattern(2, 2, 4, 1));
  all = with_pair(all, kCross[1], 1, 2, gen_cross_pattern(1, 2, 4, 2));
  all = with_pair(all, kCross[2], 2, 1, gen_cross_pattern(2, 1, 4, 3));
  ASSERT_TRUE(validate_bracelet(all).empty());
  check(realize(all).graph, color_bracelet_equal(all, 4), 10);
}

TEST(BraceletEqual, ConstructionCasesAllOccur) {
  std::set<int> cases;
  int fallbacks = 0;
  for (int x = 2; x <= 12; ++x)
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      GenConfig c;
      c.family = "bracelet_random";
      c.seed = seed;
      c.max_bag = x;
      c.equal_bags = true;
      const auto s = std::get<BraceletSpec>(gen(c));
      BraceletTrace tr;
      const Coloring col = color_bracelet_equal(s, x, &tr);
      check(realize(s).graph, col, ceil_ratio(7, 3, x));
      cases.insert(tr.case_number);
      fallbacks += tr.equal_fallback;
    }
  EXPECT_TRUE(cases.count(0));
  EXPECT_TRUE(cases.count(1));
  EXPECT_TRUE(cases.count(2));
  EXPECT_EQ(fallbacks, 0);
}

TEST(Bracelet, Examples) {
  EXPECT_EQ(color_bracelet(BraceletSpec::singletons()).k, 3);

  auto s = BraceletSpec::singletons();
  s.size[A1_0] = 2;
  BraceletTrace tr;
  const Graph g = realize(s).graph;
  const Coloring c = color_bracelet(s, &tr);
  EXPECT_EQ(tr.strong_sets, 1);
  EXPECT_LE(chromatic_number_exact(g).k, check(g, c, 4));

  const auto p = with_pair(BraceletSpec::plain(2), kCross[0], 1, 1, {{0, 0}});
  const Graph gp = realize(p).graph;
  EXPECT_LE(chromatic_number_exact(gp).k, check(gp, color_bracelet(p), 5));
}

TEST(Bracelet, RandomWithinSevenSixths) {
  for (int max_bag = 2; max_bag <= 5; ++max_bag)
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      GenConfig c;
      c.family = "bracelet_random";
      c.seed = seed;
      c.max_bag = max_bag;
      const auto s = std::get<BraceletSpec>(gen(c));
      const Graph g = realize(s).graph;
      const int k = check(g, color_bracelet(s), seven_sixths(omega_of_graph(g)));
      if (g.size() <= 18) EXPECT_LE(chromatic_number_exact(g).k, k);
    }
}

// ---- Driver --------------------------------------------------------------------

TEST(Driver, Examples) {
  DriverTrace t;
  EXPECT_EQ(color_graph(emerald(), &t).k, 4);
  EXPECT_EQ(t.emerald_pieces, 1);

  const Graph ek2 = blowup_graph(emerald(), std::vector<int>(11, 2));
  Graph h(ek2.size() + 1);
  for (auto [u, v] : ek2.edges()) h.add_edge(u, v);
  for (int v = 0; v < ek2.size(); ++v) h.add_edge(v, ek2.size());
  EXPECT_EQ(omega_of_graph(h), 7);
  DriverTrace tu;
  EXPECT_EQ(color_graph(h, &tu).k, 9);
  EXPECT_EQ(tu.universal, 1);
}

TEST(Driver, TwoEmeraldsSharingAVertex) {
  Graph g(21);
  for (auto [u, v] : emerald().edges()) {
    g.add_edge(u, v);
    g.add_edge(u ? u + 10 : 0, v ? v + 10 : 0);
  }
  // The glued graph has an induced P7 through the shared vertex.
  EXPECT_THROW(color_graph(g), NotInClass);
  DriverTrace t;
  const Coloring c = color_graph(g, &t, DriverOptions{false});
  EXPECT_TRUE(verify_coloring(g, c).proper);
  EXPECT_EQ(c.k, 4);
  EXPECT_EQ(c.k, chromatic_number_exact(g).k);
  EXPECT_EQ(t.clique_cutsets, 1);
}

TEST(Driver, CutsetMergeIsAPermutationPerSide) {
  // Two E[K2] pieces glued along a maximum clique of each: the edge-joined
  // triangle bags {1,7,8} are identified.
  const Graph a = blowup_graph(emerald(), std::vector<int>(11, 1));
  Graph g(a.size() + 8);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  // Second copy shares labels 1, 7, 8 (indices 0, 6, 7).
  std::vector<int> map(11);
  int next = a.size();
  for (int v = 0; v < 11; ++v) map[v] = (v == 0 || v == 6 || v == 7) ? v : next++;
  for (auto [u, v] : a.edges()) g.add_edge(map[u], map[v]);
  const Coloring c = color_graph(g, nullptr, DriverOptions{false});
  EXPECT_TRUE(verify_coloring(g, c).proper);
  for (const auto& side : {std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, map}) {
    std::set<int> used;
    for (int v : side) used.insert(c.color[v]);
    EXPECT_EQ(used.size(), 4u);
  }
}

TEST(Driver, Errors) {
  try {
    color_graph(cycle_graph(5));
    FAIL();
  } catch (const NotInClass& e) {
    EXPECT_EQ(*e.report().kind, Forbidden::C5);
    EXPECT_EQ(e.report().witness.size(), 5u);
  }
  EXPECT_EQ(color_graph(Graph(0)).k, 0);
  EXPECT_EQ(color_graph(cycle_graph(6)).k, 2);
}

TEST(Driver, BraceletWithoutStructureIsUnavailable) {
  // Bracelets with a cross pair have no cutset or universal vertex. The driver
  // either finds a strong stable set or reports that no structure applies.
  int unavailable = 0, colored = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenConfig c;
    c.family = "bracelet_random";
    c.seed = seed;
    c.max_bag = 3;
    c.equal_bags = true;
    c.require_cross = true;
    GeneratedSpec s;
    try {
      s = gen(c);
    } catch (const GenerationError&) {
      continue;
    }
    const Graph g = spec_graph(s);
    try {
      const Coloring col = color_graph(g);
      EXPECT_LE(col.k, eleven_ninths(omega_of_graph(g)));
      ++colored;
    } catch (const StructureUnavailable&) {
      ++unavailable;
    }
  }
  EXPECT_GT(unavailable + colored, 0);
}

TEST(ColorSpec, EveryFamilyWithinItsBudget) {
  for (const auto& f : gen_families())
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      GenConfig c;
      c.family = f;
      c.seed = seed;
      c.x = 3 + static_cast<int>(seed);
      c.y = 2;
      c.r = 1;
      c.s = 1;
      const auto r = color_spec(gen(c));
      EXPECT_TRUE(verify_coloring(r.graph, r.coloring).proper) << f;
      EXPECT_LE(r.coloring.k, r.budget.budget) << f;
      EXPECT_EQ(r.budget.omega, omega_of_graph(r.graph)) << f;
    }
}
