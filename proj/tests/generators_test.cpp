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

GenConfig config(const std::string& family, std::uint64_t seed) {
  GenConfig c;
  c.family = family;
  c.seed = seed;
  c.x = 2 + static_cast<int>(seed % 4);
  c.y = 1;
  c.r = 1;
  c.s = 1;
  c.t = 1 + static_cast<int>(seed % 3);
  return c;
}

}  // namespace

TEST(Gen, Deterministic) {
  for (const auto& f : gen_families()) {
    const auto a = spec_to_json(gen(config(f, 17)));
    const auto b = spec_to_json(gen(config(f, 17)));
    EXPECT_EQ(a, b) << f;
  }
  EXPECT_NE(spec_to_json(gen(config("emerald_random", 1))),
            spec_to_json(gen(config("emerald_random", 2))));
}

TEST(Gen, EveryFamilyIsValidAndInClass) {
  for (const auto& f : gen_families())
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const auto s = gen(config(f, seed));
      if (const auto* b = std::get_if<BraceletSpec>(&s)) EXPECT_TRUE(validate_bracelet(*b).empty());
      const Graph g = spec_graph(s);
      if (g.size() <= 60) EXPECT_TRUE(check_freeness(g).is_free) << f << " " << seed;
    }
}

TEST(Gen, GxParameters) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto s = std::get<BlowupSpec>(gen(config("gx", seed)));
    const Graph& b = c7_plus_2t_base();
    const int x = s.weights[role(b, "1")];
    auto w = [&](const char* l) { return s.weights[role(b, l)]; };
    EXPECT_EQ(w("7") + w("t7"), x + 2);
    EXPECT_EQ(w("2") + w("t2"), x + 2);
    EXPECT_LE(w("t7") + w("t2"), x + 2);
  }
}

TEST(Gen, SpecialEmeraldLayout) {
  GenConfig c = config("special_emerald", 1);
  c.x = 5;
  c.y = 3;
  c.r = 1;
  c.s = 1;
  c.p = 2;
  const auto s = std::get<BlowupSpec>(gen(c));
  EXPECT_EQ(s.weights, (std::vector<int>{5, 5, 3, 3, 4, 2, 5, 2, 4, 5, 5}));
  c.y = 9;
  EXPECT_THROW(gen(c), InvalidInput);
}

TEST(CrossPattern, StaircaseWithinTarget) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int a = 1 + static_cast<int>(seed % 4), b = 1 + static_cast<int>(seed / 4 % 4);
    const int target = std::max(a, b) + 1 + static_cast<int>(seed % 2);
    const auto rel = gen_cross_pattern(a, b, target, seed);
    std::vector<int> k(a, 0);
    for (auto [i, j] : rel) ++k[i];
    EXPECT_EQ(k[0], b);
    for (int i = 0; i < a; ++i) {
      EXPECT_GE(k[i], 1);
      if (i) EXPECT_LE(k[i], k[i - 1]);
      EXPECT_LE(i + 1 + k[i], target);
    }
  }
  EXPECT_THROW(gen_cross_pattern(3, 3, 3, 1), InvalidInput);
  EXPECT_THROW(gen_cross_pattern(2, 3, 2, 1), InvalidInput);
  EXPECT_THROW(gen_cross_pattern(0, 1, 3, 1), InvalidInput);
}

TEST(Gen, RequireCrossMayExhaustAttempts) {
  GenConfig c = config("bracelet_random", 1);
  c.max_bag = 1;
  c.require_cross = true;
  c.max_attempts = 50;
  try {
    gen(c);
    FAIL();
  } catch (const GenerationError& e) {
    EXPECT_EQ(e.attempts(), 50);
  }
  c.max_bag = 4;
  c.max_attempts = 2000;
  const auto s = std::get<BraceletSpec>(gen(c));
  EXPECT_FALSE(s.e13.empty());
  EXPECT_FALSE(s.e61.empty());
  EXPECT_FALSE(s.e72.empty());
}

TEST(Gen, Errors) {
  EXPECT_THROW(gen(config("nope", 1)), InvalidInput);
  GenConfig c = config("emerald_random", 1);
  c.wmin = 5;
  c.wmax = 2;
  EXPECT_THROW(gen(c), InvalidInput);
  c = config("c7_equal", 1);
  c.t = 0;
  EXPECT_THROW(gen(c), InvalidInput);
}

TEST(Fixture, JsonHeaderAndRoundTrip) {
  GenConfig c = config("bracelet_random", 3);
  c.max_bag = 4;
  const auto s = gen(c);
  const Json j = fixture_json(c, s);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["generator"]["prng"], "mt19937_64");
  EXPECT_EQ(j["generator"]["family"], "bracelet_random");
  EXPECT_EQ(j["generator"]["seed"], 3);
  const auto back = parse_spec(j.dump(2));
  EXPECT_EQ(spec_to_json(back), spec_to_json(s));
}
