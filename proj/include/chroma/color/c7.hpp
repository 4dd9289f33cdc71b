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

#ifndef CHROMA_COLOR_C7_HPP
#define CHROMA_COLOR_C7_HPP

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include "chroma/color/classes.hpp"
#include "chroma/structure/blowup.hpp"
#include "chroma/structure/catalog.hpp"

namespace chroma {

/// Catalog levels for blowups of induced subgraphs of the emerald.
enum class Level { C7 = 0, C7PlusV = 1, C7Plus2F = 2, C7Plus2T = 3, EMinus8 = 4, Emerald = 5 };

/// Colors any blowup of an induced subgraph of the emerald, using only
/// catalog levels below `below`. Defined in dispatch.hpp.
inline ClassList sub_emerald_classes(const Graph& base, std::span<const int> w, Level below);

/// Any emerald blowup within ceil(11w/9). Defined in emerald.hpp.
inline ClassList emerald_classes(std::span<const int> w);

/// Bag colors of C7[K_t]: bag i gets i*t .. i*t+t-1 modulo ceil(7t/3).
/// For t = 1 the formula repeats a color on bags 1 and 7, so the cycle is
/// colored 0,1,0,1,0,1,2 instead.
inline std::vector<std::vector<int>> c7_equal_bag_colors(int t) {
  if (t < 1) throw InvalidInput("color_c7_equal needs t >= 1");
  std::vector<std::vector<int>> out(7);
  if (t == 1) {
    const int c[7] = {0, 1, 0, 1, 0, 1, 2};
    for (int i = 0; i < 7; ++i) out[i] = {c[i]};
    return out;
  }
  const int m = ceil_ratio(7, 3, t);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < t; ++j) out[i].push_back((i * t + j) % m);
  return out;
}

/// C7[K_t] on base vertices `cycle` (in cycle order), as classes.
inline ClassList c7_layer(std::span<const int> cycle, int t) {
  if (t <= 0) return {};
  ClassList local = from_bag_colors(c7_equal_bag_colors(t), ceil_ratio(7, 3, t));
  return map_classes(local, cycle);
}

inline Coloring color_c7_equal(int t) {
  BlowupSpec s = BlowupSpec::named("c7", std::vector<int>(7, t));
  const int order[7] = {0, 1, 2, 3, 4, 5, 6};
  return realize_classes(realize(s), c7_layer(order, t));
}

inline int seven_sixths(int omega) { return ceil_ratio(7, 6, omega); }

namespace detail {

inline std::vector<int> roles(const Graph& base, std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(role(base, n));
  return out;
}

inline bool any_zero(std::span<const int> w) {
  return std::find(w.begin(), w.end(), 0) != w.end();
}

// Strong stable set of the blowup, preferring one that keeps every bag.
inline std::optional<Mask> pick_strong(const Graph& base, std::span<const int> w);

// C7[K3] peel on `cycle`, then `rest` on the residual.
template <typename F>
ClassList peel_c7k3(std::span<const int> w, std::span<const int> cycle, F&& rest) {
  ClassList layer = c7_layer(cycle, 3);
  std::vector<int> left = minus_classes(std::vector<int>(w.begin(), w.end()), layer);
  return concat(layer, rest(left));
}

// Two C7 layers of sizes x2 and x3; the split overshoots 7/6 unless
// one size is 0 mod 3 or both are 2 mod 3, so otherwise peel C7[K3].
template <typename F>
ClassList two_layers(const Graph& b, std::span<const int> w, const std::vector<int>& cyc2,
                     const std::vector<int>& cyc3, int x2, int x3, F&& recurse) {
  const bool split = x2 % 3 == 0 || x3 % 3 == 0 || (x2 % 3 == 2 && x3 % 3 == 2);
  if (split) return concat(c7_layer(cyc2, x2), c7_layer(cyc3, x3));
  if (x2 < 3 && x3 < 3) return exact_classes(b, w);
  const bool first = x2 >= 3 && (x2 % 3 == 1 || x3 < 3);
  return peel_c7k3(w, first ? cyc2 : cyc3, recurse);
}

}  // namespace detail

/// C7+v: perfect when a cycle bag is empty; otherwise C7[K_t] at the least
/// cycle weight t plus a perfect remainder.
inline ClassList c7_plus_v_classes(std::span<const int> w) {
  const Graph& b = c7_plus_v_base();
  const int omega = omega_of(b, w);
  const int t = *std::min_element(w.begin(), w.begin() + 7);
  ClassList cl;
  if (t == 0) {
    cl = perfect_classes(b, w);
  } else {
    const int cycle[7] = {0, 1, 2, 3, 4, 5, 6};
    cl = c7_layer(cycle, t);
    auto rest = minus_classes(std::vector<int>(w.begin(), w.end()), cl);
    cl = concat(cl, perfect_classes(b, rest));
  }
  return checked(b, w, cl, seven_sixths(omega), "color_c7_plus_v");
}

/// C7+2f: t classes {1, f2, f7} with t the least of those weights; the
/// rest is perfect or a blowup of C7+v.
inline ClassList c7_plus_2f_classes(std::span<const int> w) {
  const Graph& b = c7_plus_2f_base();
  const int omega = omega_of(b, w);
  const auto trio = detail::roles(b, {"1", "f2", "f7"});
  const int t = std::min({w[trio[0]], w[trio[1]], w[trio[2]]});
  ClassList cl;
  if (t == 0) {
    cl = sub_emerald_classes(b, w, Level::C7Plus2F);
  } else {
    cl = repeat(mask_of(trio), t);
    auto rest = minus_classes(std::vector<int>(w.begin(), w.end()), cl);
    cl = concat(cl, sub_emerald_classes(b, rest, Level::C7Plus2F));
  }
  return checked(b, w, cl, seven_sixths(omega), "color_c7_plus_2f");
}

/// C7+2t by induction: empty bag, strong stable set, or the two-layer split
/// of the pattern x1 on {1,3,4,5,6}, x2 on {7,t2}, x3 on {2,t7}.
inline ClassList c7_plus_2t_classes(std::span<const int> w) {
  const Graph& b = c7_plus_2t_base();
  const int omega = omega_of(b, w);
  ClassList cl;
  if (detail::any_zero(w)) {
    cl = sub_emerald_classes(b, w, Level::C7Plus2T);
  } else if (auto s = detail::pick_strong(b, w)) {
    cl = concat({*s}, c7_plus_2t_classes(minus_classes(
                          std::vector<int>(w.begin(), w.end()), ClassList{*s})));
  } else {
    const auto big = detail::roles(b, {"1", "3", "4", "5", "6"});
    const int x1 = w[big[0]], x2 = w[role(b, "7")], x3 = w[role(b, "2")];
    bool pattern = w[role(b, "t2")] == x2 && w[role(b, "t7")] == x3 && x1 == x2 + x3;
    for (int v : big) pattern = pattern && w[v] == x1;
    if (pattern) {
      const auto cyc2 = detail::roles(b, {"1", "t2", "3", "4", "5", "6", "7"});
      const auto cyc3 = detail::roles(b, {"1", "2", "3", "4", "5", "6", "t7"});
      cl = detail::two_layers(b, w, cyc2, cyc3, x2, x3,
                              [](std::span<const int> r) { return c7_plus_2t_classes(r); });
    } else {
      // No strong stable set, yet not the tight pattern: exact covering.
      cl = exact_classes(b, w);
    }
  }
  return checked(b, w, cl, seven_sixths(omega), "color_c7_plus_2t");
}

/// E-8 by induction: empty bag, strong stable set, or the two-layer split
/// of the pattern x1 on {1,2,10,11}, x2 on {4,6,9}, x3 on {3,5,7}.
inline ClassList e_minus_8_classes(std::span<const int> w) {
  const Graph& b = e_minus_8_base();
  const int omega = omega_of(b, w);
  ClassList cl;
  if (detail::any_zero(w)) {
    cl = sub_emerald_classes(b, w, Level::EMinus8);
  } else if (auto s = detail::pick_strong(b, w)) {
    cl = concat({*s}, e_minus_8_classes(minus_classes(
                          std::vector<int>(w.begin(), w.end()), ClassList{*s})));
  } else {
    auto at = [&](const char* l) { return w[role(b, l)]; };
    const int x1 = at("1"), x2 = at("4"), x3 = at("3");
    const bool pattern = at("2") == x1 && at("10") == x1 && at("11") == x1 &&
                         at("6") == x2 && at("9") == x2 && at("5") == x3 &&
                         at("7") == x3 && x1 == x2 + x3;
    if (pattern) {
      const auto cyc2 = detail::roles(b, {"1", "2", "9", "10", "4", "11", "6"});
      const auto cyc3 = detail::roles(b, {"1", "2", "3", "10", "5", "11", "7"});
      cl = detail::two_layers(b, w, cyc2, cyc3, x2, x3,
                              [](std::span<const int> r) { return e_minus_8_classes(r); });
    } else {
      // No strong stable set although some maximal clique is light, e.g.
      // {5,6,11}: exact covering.
      cl = exact_classes(b, w);
    }
  }
  return checked(b, w, cl, seven_sixths(omega), "color_e_minus_8");
}

/// Checks the Gx constraints on a C7+2t weight vector and returns x.
inline int gx_parameter(std::span<const int> w) {
  const Graph& b = c7_plus_2t_base();
  auto at = [&](const char* l) { return w[role(b, l)]; };
  const int x = at("1");
  bool ok = x >= 1;
  for (const char* l : {"3", "4", "5", "6"}) ok = ok && at(l) == x;
  ok = ok && at("7") + at("t7") == x + 2 && at("2") + at("t2") == x + 2 &&
       at("t7") + at("t2") <= x + 2;
  if (!ok) throw InvalidInput("weights violate the Gx constraints");
  return x;
}

/// Gx within ceil(7(2x+1)/6): exact covering for x <= 6, otherwise a C7[K3]
/// peel that leaves G_{x-3}.
inline ClassList gx_classes(std::span<const int> w) {
  const Graph& b = c7_plus_2t_base();
  const int x = gx_parameter(w);
  const int budget = seven_sixths(2 * x + 1);
  if (x <= 6) return checked(b, w, exact_classes(b, w), budget, "color_gx");
  auto at = [&](const char* l) { return w[role(b, l)]; };
  std::vector<int> cycle;
  if (at("7") >= 4 && at("t2") >= 4)
    cycle = detail::roles(b, {"1", "t2", "3", "4", "5", "6", "7"});
  else if (at("t7") >= 4 && at("2") >= 4)
    cycle = detail::roles(b, {"1", "2", "3", "4", "5", "6", "t7"});
  else
    cycle = detail::roles(b, {"1", "2", "3", "4", "5", "6", "7"});
  ClassList cl =
      detail::peel_c7k3(w, cycle, [](std::span<const int> r) { return gx_classes(r); });
  return checked(b, w, cl, budget, "color_gx");
}

namespace detail {

inline void expect_base(const BlowupSpec& spec, const Graph& base, const char* who) {
  spec.validate();
  if (!(spec.base == base)) throw InvalidInput(std::string(who) + ": wrong base graph");
}

}  // namespace detail

inline Coloring color_c7_plus_v(const BlowupSpec& spec) {
  detail::expect_base(spec, c7_plus_v_base(), "color_c7_plus_v");
  return realize_classes(realize(spec), c7_plus_v_classes(spec.weights));
}

inline Coloring color_c7_plus_2t(const BlowupSpec& spec) {
  detail::expect_base(spec, c7_plus_2t_base(), "color_c7_plus_2t");
  return realize_classes(realize(spec), c7_plus_2t_classes(spec.weights));
}

inline Coloring color_c7_plus_2f(const BlowupSpec& spec) {
  detail::expect_base(spec, c7_plus_2f_base(), "color_c7_plus_2f");
  return realize_classes(realize(spec), c7_plus_2f_classes(spec.weights));
}

inline Coloring color_e_minus_8(const BlowupSpec& spec) {
  detail::expect_base(spec, e_minus_8_base(), "color_e_minus_8");
  return realize_classes(realize(spec), e_minus_8_classes(spec.weights));
}

inline Coloring color_gx(const BlowupSpec& spec) {
  detail::expect_base(spec, c7_plus_2t_base(), "color_gx");
  return realize_classes(realize(spec), gx_classes(spec.weights));
}

}  // namespace chroma

#include "chroma/color/dispatch.hpp"

#endif  // CHROMA_COLOR_C7_HPP
