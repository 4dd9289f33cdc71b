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

#ifndef CHROMA_GENERATORS_HPP
#define CHROMA_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "chroma/freeness.hpp"
#include "chroma/structure/blowup.hpp"
#include "chroma/structure/bracelet.hpp"
#include "chroma/structure/json.hpp"

namespace chroma {

inline constexpr const char* kPrngName = "mt19937_64";

struct GenConfig {
  std::uint64_t seed = 1;
  std::string family;
  int t = 1;                   // c7_equal, emerald_equal
  int x = 1;                   // gx, special_emerald
  int y = 0, r = 0, s = 0;     // special_emerald; z is x + 2 - y
  int p = 1;                   // special_emerald: |L8|
  int wmin = 1, wmax = 6;      // random blowup weights
  int max_bag = 3;             // bracelet_random bag sizes are 1..max_bag
  bool equal_bags = false;     // bracelet_random: every bag max_bag, cross cliques <= max_bag
  bool require_cross = false;  // bracelet_random: all three uncertain pairs signed
  int max_attempts = 2000;
};

inline const std::vector<std::string>& gen_families() {
  static const std::vector<std::string> f{
      "c7_equal",        "c7_plus_v",      "c7_plus_2t",    "c7_plus_2f", "e_minus_8",
      "gx",              "special_emerald", "emerald_random", "emerald_equal", "bracelet_random"};
  return f;
}

class GenerationError : public Error {
 public:
  GenerationError(const std::string& what, int attempts)
      : Error(what + " after " + std::to_string(attempts) + " attempts"), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

using GeneratedSpec = AnySpec;

/// Staircase relation on a x b: left vertex i sees the first k_i right
/// vertices, k_1 = b >= k_2 >= ... >= 1, and the union of both sides has
/// clique number at most `target` (i + k_i <= target for all i).
inline CrossRelation gen_cross_pattern(int a, int b, int target, std::uint64_t seed) {
  if (a < 1 || b < 1) throw InvalidInput("gen_cross_pattern: sides must be nonempty");
  if (b + 1 > target || a + 1 > target)
    throw InvalidInput("gen_cross_pattern: cross clique number " + std::to_string(target) +
                       " is infeasible for sides " + std::to_string(a) + " and " +
                       std::to_string(b) + " (at least " + std::to_string(std::max(a, b) + 1) +
                       ")");
  std::mt19937_64 rng(seed);
  CrossRelation rel;
  int k = b;
  for (int i = 0; i < a; ++i) {
    if (i > 0) {
      const int hi = std::min(k, target - (i + 1));
      k = std::uniform_int_distribution<int>(1, hi)(rng);
    }
    for (int j = 0; j < k; ++j) rel.push_back({i, j});
  }
  return rel;
}

namespace detail {

inline BlowupSpec random_blowup(const std::string& name, const GenConfig& c,
                                std::mt19937_64& rng) {
  if (c.wmin < 0 || c.wmin > c.wmax) throw InvalidInput("gen: need 0 <= wmin <= wmax");
  const Graph& base = base_by_name(name);
  std::uniform_int_distribution<int> d(c.wmin, c.wmax);
  std::vector<int> w(base.size());
  for (int& x : w) x = d(rng);
  return BlowupSpec::named(name, w);
}

inline BlowupSpec gx_spec(const GenConfig& c, std::mt19937_64& rng) {
  const int x = c.x;
  if (x < 1) throw InvalidInput("gen gx: x must be positive");
  const Graph& b = c7_plus_2t_base();
  std::vector<int> w(b.size(), 0);
  for (const char* l : {"1", "3", "4", "5", "6"}) w[role(b, l)] = x;
  const int t7 = std::uniform_int_distribution<int>(1, x + 1)(rng);
  const int t2 = std::uniform_int_distribution<int>(1, std::min(x + 1, x + 2 - t7))(rng);
  w[role(b, "t7")] = t7;
  w[role(b, "7")] = x + 2 - t7;
  w[role(b, "t2")] = t2;
  w[role(b, "2")] = x + 2 - t2;
  return BlowupSpec::named("gx", w);
}

inline BlowupSpec special_emerald_spec(const GenConfig& c) {
  const int x = c.x, y = c.y, z = c.x + 2 - c.y, r = c.r, s = c.s;
  if (x < 1 || y < 0 || z < 0 || r < 0 || s < 0 || y - r < 0 || z - s < 0 || c.p < 0)
    throw InvalidInput("gen special_emerald: parameters out of range");
  std::vector<int> w(11);
  auto L = [&](int label) -> int& { return w[label - 1]; };
  L(1) = L(2) = L(10) = L(11) = x;
  L(4) = y;
  L(5) = z;
  L(7) = z + r;
  L(9) = y + s;
  L(6) = y - r;
  L(3) = z - s;
  L(8) = c.p;
  return BlowupSpec::named("special_emerald", w);
}

// Bag split of A1 into (0,+,-), A2/A3 into (0,-), A6/A7 into (0,+).
// Empty when require_cross is set and some pair cannot be signed.
inline std::optional<BraceletSpec> random_bracelet(const GenConfig& c, std::mt19937_64& rng) {
  if (c.max_bag < 1) throw InvalidInput("gen bracelet_random: max_bag must be positive");
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  BraceletSpec s;
  std::array<int, 8> bag{};
  for (int i = 1; i <= 7; ++i) bag[i] = c.equal_bags ? c.max_bag : uni(1, c.max_bag);
  s.size[A4] = bag[4];
  s.size[A5] = bag[5];
  auto split2 = [&](int n, Part zero, Part sign) {
    const int k = uni(0, n);
    s.size[sign] = k;
    s.size[zero] = n - k;
  };
  split2(bag[2], A2_0, A2_minus);
  split2(bag[3], A3_0, A3_minus);
  split2(bag[6], A6_0, A6_plus);
  split2(bag[7], A7_0, A7_plus);
  const int plus = uni(0, bag[1]);
  const int minus = uni(0, bag[1] - plus);
  s.size[A1_plus] = plus;
  s.size[A1_minus] = minus;
  s.size[A1_0] = bag[1] - plus - minus;
  for (const auto& cr : kCross) {
    const int a = s.size[cr.left], b = s.size[cr.right];
    const int target = c.equal_bags ? c.max_bag : a + b;
    // Both or neither side of a pair is signed.
    if (a == 0 || b == 0 || std::max(a, b) + 1 > target) {
      if (c.require_cross) return std::nullopt;
      s.size[zero_part(cr.left)] += a;
      s.size[cr.left] = 0;
      s.size[zero_part(cr.right)] += b;
      s.size[cr.right] = 0;
      continue;
    }
    s.*cr.rel = gen_cross_pattern(a, b, target, rng());
  }
  return s;
}

}  // namespace detail

/// Deterministic in (seed, config); every result is validated.
inline GeneratedSpec gen(const GenConfig& c) {
  std::mt19937_64 rng(c.seed);
  const std::string& f = c.family;
  auto checked_blowup = [](BlowupSpec s) {
    s.validate();
    const auto fr = check_freeness(realize(s).graph);
    if (!fr.is_free) throw InternalDefect("generated blowup is not (P7,C4,C5)-free");
    return s;
  };
  if (f == "c7_equal") {
    if (c.t < 1) throw InvalidInput("gen c7_equal: t must be positive");
    return checked_blowup(BlowupSpec::named("c7", std::vector<int>(7, c.t)));
  }
  if (f == "emerald_equal") {
    if (c.t < 0) throw InvalidInput("gen emerald_equal: t must be nonnegative");
    return checked_blowup(BlowupSpec::named("emerald", std::vector<int>(11, c.t)));
  }
  if (f == "c7_plus_v") return checked_blowup(detail::random_blowup("c7v", c, rng));
  if (f == "c7_plus_2t") return checked_blowup(detail::random_blowup("c7_2t", c, rng));
  if (f == "c7_plus_2f") return checked_blowup(detail::random_blowup("c7_2f", c, rng));
  if (f == "e_minus_8") return checked_blowup(detail::random_blowup("e_minus_8", c, rng));
  if (f == "emerald_random") return checked_blowup(detail::random_blowup("emerald", c, rng));
  if (f == "gx") return checked_blowup(detail::gx_spec(c, rng));
  if (f == "special_emerald") return checked_blowup(detail::special_emerald_spec(c));
  if (f == "bracelet_random") {
    for (int attempt = 1; attempt <= c.max_attempts; ++attempt) {
      auto s = detail::random_bracelet(c, rng);
      if (s && validate_bracelet(*s).empty()) return *s;
    }
    throw GenerationError("bracelet_random: no valid bracelet", c.max_attempts);
  }
  throw InvalidInput("unknown generator family '" + f + "'");
}

inline Json config_to_json(const GenConfig& c) {
  return {{"family", c.family},     {"seed", c.seed},       {"t", c.t},
          {"x", c.x},               {"y", c.y},             {"r", c.r},
          {"s", c.s},               {"p", c.p},             {"wmin", c.wmin},
          {"wmax", c.wmax},         {"max_bag", c.max_bag}, {"equal_bags", c.equal_bags},
          {"require_cross", c.require_cross}, {"max_attempts", c.max_attempts}, {"prng", kPrngName}};
}

/// Fixture document: schema version, generator config header, spec.
inline Json fixture_json(const GenConfig& c, const GeneratedSpec& s) {
  return {{"schema", 1}, {"generator", config_to_json(c)}, {"spec", spec_to_json(s)}};
}

}  // namespace chroma

#endif  // CHROMA_GENERATORS_HPP
