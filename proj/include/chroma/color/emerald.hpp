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

#ifndef CHROMA_COLOR_EMERALD_HPP
#define CHROMA_COLOR_EMERALD_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "chroma/color/c7.hpp"
#include "chroma/isomorphism.hpp"
#include "chroma/structure/blowup.hpp"

namespace chroma {

inline int eleven_ninths(int omega) { return ceil_ratio(11, 9, omega); }

/// 11 stable triples of the emerald (labels) covering every vertex exactly
/// three times, i.e. an 11-coloring of E[K3]. {8,10,11} is used twice.
inline const std::vector<std::vector<int>>& ek3_stable_system() {
  static const std::vector<std::vector<int>> s{
      {1, 3, 5}, {1, 3, 11}, {1, 5, 9}, {2, 4, 6},  {2, 5, 7},  {2, 7, 10},
      {3, 6, 8}, {4, 6, 9},  {4, 7, 9}, {8, 10, 11}, {8, 10, 11}};
  return s;
}

inline ClassList ek3_classes() {
  ClassList out;
  for (const auto& t : ek3_stable_system()) {
    Mask m = 0;
    for (int l : t) m |= Mask{1} << (l - 1);
    out.push_back(m);
  }
  return out;
}

inline const std::vector<std::vector<int>>& emerald_automorphisms() {
  static const auto a = automorphisms(emerald());
  return a;
}

namespace detail {

// Emerald labels to indices.
inline int E(int label) { return label - 1; }

inline Mask E(std::initializer_list<int> labels) {
  Mask m = 0;
  for (int l : labels) m |= Mask{1} << (l - 1);
  return m;
}

inline std::vector<int> E_cycle(std::initializer_list<int> labels) {
  std::vector<int> out;
  for (int l : labels) out.push_back(l - 1);
  return out;
}

// Weights seen through an automorphism: frame vertex j stands for sigma[j].
inline std::vector<int> in_frame(std::span<const int> w, const std::vector<int>& sigma) {
  std::vector<int> out(11);
  for (int j = 0; j < 11; ++j) out[j] = w[sigma[j]];
  return out;
}

inline std::vector<int> vec(std::span<const int> w) { return {w.begin(), w.end()}; }

inline bool max_triangle(std::span<const int> w, int omega, std::initializer_list<int> t) {
  return mask_weight(E(t), w) == omega;
}

inline ClassList e_sub(std::span<const int> w) {
  return sub_emerald_classes(emerald(), w, Level::Emerald);
}

inline ClassList seven_sixths_plus_one_classes(std::span<const int> w);

// First `n` entries of `from`.
inline std::vector<int> take(const std::vector<int>& from, int n) {
  require(n <= static_cast<int>(from.size()), "emerald: palette too small");
  return {from.begin(), from.begin() + n};
}

inline std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int i = a; i < b; ++i) out.push_back(i);
  return out;
}

// First n colors of 0..k-1 outside both sets.
inline std::vector<int> avoid(int k, const std::vector<int>& a, const std::vector<int>& b,
                              int n) {
  std::vector<int> out;
  for (int c = 0; c < k && static_cast<int>(out.size()) < n; ++c)
    if (std::find(a.begin(), a.end(), c) == a.end() &&
        std::find(b.begin(), b.end(), c) == b.end())
      out.push_back(c);
  require(static_cast<int>(out.size()) == n, "emerald: not enough free colors");
  return out;
}

// Special emerald with x odd: H holds L7, L6, L5, L4, L3, L9, t vertices of
// L1 and L2 and one vertex of L8, colored with x+2+t colors so that L7 and
// L9 get disjoint colors.
inline ClassList special_odd_h(std::span<const int> w, int x, int t) {
  const int W = x + 2 + t;
  const int a = w[E(7)], b = w[E(9)];
  std::vector<std::vector<int>> c(11);
  auto& c1 = c[E(1)];
  auto& c2 = c[E(2)];
  auto& c7 = c[E(7)];
  auto& c9 = c[E(9)];
  int v;
  if (a <= t && b <= t) {
    c1 = range(0, t), c2 = range(t, 2 * t), v = 2 * t;
    c7 = take(c2, a), c9 = take(c1, b);
  } else if (b <= t) {
    c1 = range(0, t), c7 = range(t, t + a), v = t + a;
    c2 = take(c7, t), c9 = take(c1, b);
  } else if (a <= t) {
    c2 = range(0, t), c9 = range(t, t + b), v = t + b;
    c1 = take(c9, t), c7 = take(c2, a);
  } else {
    c7 = range(0, a), c9 = range(a, a + b), v = a + b;
    c1 = take(c9, t), c2 = take(c7, t);
  }
  require(v < W, "special emerald: no color left for L8");
  c[E(8)] = {v};
  c[E(6)] = avoid(W, c1, c7, w[E(6)]);
  c[E(3)] = avoid(W, c2, c9, w[E(3)]);
  c[E(5)] = take(c7, w[E(5)]);
  c[E(4)] = take(c9, w[E(4)]);
  return from_bag_colors(c, W);
}

// Both end triangles of the minimum vertex 8 fail to be maximum.
inline ClassList special_emerald_classes(std::span<const int> w, int omega) {
  const int x = w[E(1)], y = w[E(4)], z = w[E(5)];
  const int r = w[E(7)] - z, s = w[E(9)] - y;
  require(w[E(2)] == x && w[E(10)] == x && w[E(11)] == x && w[E(6)] == y - r &&
              w[E(3)] == z - s && omega == 2 * x + 2 && y + z == x + 2 && r >= 0 && s >= 0,
          "special emerald: weights do not fit the parameterization");
  auto peel = [&](std::initializer_list<int> cyc) {
    return peel_c7k3(w, E_cycle(cyc),
                     [](std::span<const int> rest) { return seven_sixths_plus_one_classes(rest); });
  };
  if (r >= 3) return peel({1, 2, 9, 10, 4, 11, 7});
  if (s >= 3) return peel({2, 1, 7, 11, 5, 10, 9});
  if (y + s < x - 2) return peel({1, 2, 3, 10, 5, 11, 7});
  if (z + r < x - 2) return peel({2, 1, 6, 11, 4, 10, 9});
  require(x >= 4 && x <= 10, "special emerald: x out of range");
  // H and G-H get separate palettes.
  std::vector<int> h(11, 0);
  for (int l : {7, 6, 5, 4, 3, 9}) h[E(l)] = w[E(l)];
  int t;
  ClassList hc;
  if (x % 2 == 1) {
    t = (x + 1) / 2;
    h[E(1)] = h[E(2)] = t;
    h[E(8)] = 1;
    hc = special_odd_h(h, x, t);
  } else if (x <= 6) {
    t = x / 2 + 1;
    h[E(1)] = h[E(2)] = t;
    hc = perfect_classes(emerald(), h);
  } else {
    t = x / 2;
    h[E(1)] = h[E(2)] = t;
    h[E(8)] = w[E(8)];
    hc = exact_classes(emerald(), h);
  }
  checked(emerald(), h, hc, x + 2 + t, "special emerald H");
  auto rest = minus_classes(vec(w), hc);
  ClassList rc = perfect_classes(emerald(), rest);
  require(static_cast<int>(rc.size()) <= x, "special emerald: remainder needs more than x");
  return concat(hc, rc);
}

// {2,8,9} not maximum, {1,7,8} maximum and {3,9,10} maximum: G - (L6 + L8)
// is Gx on the vertices 1,2,3,4,5,7,9,10,11.
inline ClassList one_end_classes(std::span<const int> w) {
  const std::vector<int> keep = E_cycle({1, 2, 3, 4, 5, 7, 9, 10, 11});
  const Graph sub = induced_subgraph(emerald(), std::span<const int>(keep));
  std::vector<int> sw;
  for (int v : keep) sw.push_back(w[v]);
  const Graph& gx = c7_plus_2t_base();
  // phi: Gx vertex -> sub vertex, accepted if the pulled-back weights are Gx.
  auto isos = all_isomorphisms(gx, sub, [&](const std::vector<int>& phi) {
    std::vector<int> gw(9);
    for (int j = 0; j < 9; ++j) gw[j] = sw[phi[j]];
    try {
      gx_parameter(gw);
      return true;
    } catch (const InvalidInput&) {
      return false;
    }
  });
  require(!isos.empty(), "one end triangle: residual is not Gx");
  const auto& phi = isos.front();
  std::vector<int> gw(9), to(9);
  for (int j = 0; j < 9; ++j) {
    gw[j] = sw[phi[j]];
    to[j] = keep[phi[j]];
  }
  ClassList cl = map_classes(gx_classes(gw), to);
  const int w6 = w[E(6)], w8 = w[E(8)];
  for (int i = 0; i < std::max(w6, w8); ++i)
    cl.push_back((i < w6 ? E({6}) : 0) | (i < w8 ? E({8}) : 0));
  return cl;
}

inline ClassList seven_sixths_plus_one_classes(std::span<const int> w) {
  const Graph& e = emerald();
  const int omega = omega_of(e, w);
  const int budget = seven_sixths(omega) + 1;
  const int p = *std::min_element(w.begin(), w.end());
  auto done = [&](const ClassList& cl) {
    return checked(e, w, cl, budget, "seven_sixths_plus_one");
  };
  if (p == 0) return done(e_sub(w));
  require(p <= 2, "seven_sixths_plus_one needs p <= 2");
  if (p == 1) {
    const int i = static_cast<int>(std::find(w.begin(), w.end(), 1) - w.begin());
    auto rest = vec(w);
    rest[i] = 0;
    return done(insert_bag(e, e_sub(rest), i, 1));
  }
  if (std::all_of(w.begin(), w.end(), [](int x) { return x == 2; }))
    return done(exact_classes(e, w));
  if (auto s = pick_strong(e, w))
    return done(concat({*s}, seven_sixths_plus_one_classes(minus_classes(vec(w), {*s}))));
  for (const auto& sigma : emerald_automorphisms()) {
    if (w[sigma[E(8)]] != p) continue;
    auto f = in_frame(w, sigma);
    require(max_triangle(f, omega, {1, 2, 8}), "middle triangle of a minimum vertex not maximum");
    const bool left = max_triangle(f, omega, {1, 7, 8});
    const bool right = max_triangle(f, omega, {2, 8, 9});
    ClassList cl;
    if (!left && !right) {
      cl = special_emerald_classes(f, omega);
    } else if (left && !right) {
      require(max_triangle(f, omega, {3, 9, 10}),
              "one end triangle: {3,9,10} not maximum without a strong stable set");
      cl = one_end_classes(f);
    } else {
      continue;
    }
    return done(map_classes(cl, sigma));
  }
  throw InternalDefect("seven_sixths_plus_one: every triangle at a minimum vertex is maximum");
}

// Large-vertex step for omega in {7, 8}, in a frame where vertex 8 is the
// large one.
inline std::optional<ClassList> large_vertex_classes(std::span<const int> w, int omega) {
  const Graph& e = emerald();
  for (const auto& sigma : emerald_automorphisms()) {
    const int big = w[sigma[E(8)]];
    if (big < omega - 4 || big > omega - 2) continue;
    auto f = in_frame(w, sigma);
    if (f[E(1)] != 1) continue;  // the reflected frame has it at 1
    ClassList extra{E({7, 2}), E({1, 9})};
    auto rest = minus_classes(f, extra);
    const int w8 = rest[E(8)];
    rest[E(8)] = 0;
    ClassList cl = perfect_classes(e, rest);
    cl = insert_bag(e, cl, E(8), w8);
    return map_classes(concat(cl, extra), sigma);
  }
  for (const auto& sigma : emerald_automorphisms()) {
    const int big = w[sigma[E(8)]];
    if (big < omega - 4 || big > omega - 2) continue;
    auto f = in_frame(w, sigma);
    require(big == omega - 4 && f[E(1)] == 2 && f[E(2)] == 2, "large vertex: unexpected weights");
    const int w8 = f[E(8)];
    ClassList cl;
    if (f[E(7)] == 1 && f[E(9)] == 1) {
      auto rest = f;
      rest[E(8)] = 0;
      cl = insert_bag(e, e_sub(rest), E(8), w8);
    } else {
      ClassList extra = f[E(7)] >= 2 ? ClassList{E({2, 7}), E({2, 7})}
                                     : ClassList{E({1, 9}), E({1, 9})};
      auto rest = minus_classes(f, extra);
      rest[E(8)] = 0;
      cl = concat(insert_bag(e, perfect_classes(e, rest), E(8), w8), extra);
    }
    return map_classes(cl, sigma);
  }
  return std::nullopt;
}

inline ClassList p_le_2_classes(std::span<const int> w) {
  const Graph& e = emerald();
  const int omega = omega_of(e, w);
  const int budget = eleven_ninths(omega);
  auto done = [&](const ClassList& cl) { return checked(e, w, cl, budget, "color_emerald_p_le_2"); };
  if (seven_sixths(omega) + 1 <= budget) return done(seven_sixths_plus_one_classes(w));
  if (omega == 3) return done(exact_classes(e, w));
  if (omega == 4) {
    Mask twos = 0;
    for (int i = 0; i < 11; ++i)
      if (w[i] == 2) twos |= Mask{1} << i;
    require(mask_is_stable(e, twos), "omega 4: bags of size 2 not stable");
    ClassList cl{twos};
    return done(concat(cl, exact_classes(e, minus_classes(vec(w), cl))));
  }
  if (auto s = pick_strong(e, w))
    return done(concat({*s}, emerald_classes(minus_classes(vec(w), {*s}))));
  if (omega <= 8)
    if (auto cl = large_vertex_classes(w, omega)) return done(*cl);
  // Remaining small cases: exact covering of the whole blowup.
  return done(exact_classes(e, w));
}

}  // namespace detail

inline ClassList emerald_classes(std::span<const int> w) {
  const Graph& e = emerald();
  const int omega = omega_of(e, w);
  const int p = *std::min_element(w.begin(), w.end());
  ClassList cl;
  if (p == 0) {
    cl = detail::e_sub(w);
  } else if (p >= 3) {
    ClassList layer = ek3_classes();
    cl = concat(layer, emerald_classes(minus_classes(detail::vec(w), layer)));
  } else {
    cl = detail::p_le_2_classes(w);
  }
  return checked(e, w, cl, eleven_ninths(omega), "color_emerald");
}

namespace detail {

inline void expect_emerald(const BlowupSpec& spec, const char* who) {
  spec.validate();
  if (!(spec.base == emerald())) throw InvalidInput(std::string(who) + ": base must be the emerald");
}

}  // namespace detail

inline Coloring color_emerald_p_le_2(const BlowupSpec& spec) {
  detail::expect_emerald(spec, "color_emerald_p_le_2");
  const int p = p_value(spec);
  if (p > 2) throw InvalidInput("color_emerald_p_le_2 needs p <= 2");
  ClassList cl = p == 0 ? detail::e_sub(spec.weights) : detail::p_le_2_classes(spec.weights);
  return realize_classes(realize(spec), cl);
}

inline Coloring color_emerald_p_ge_3(const BlowupSpec& spec) {
  detail::expect_emerald(spec, "color_emerald_p_ge_3");
  if (p_value(spec) < 3) throw InvalidInput("color_emerald_p_ge_3 needs p >= 3");
  return realize_classes(realize(spec), emerald_classes(spec.weights));
}

/// Any blowup of the emerald (zero weights allowed).
inline Coloring color_emerald(const BlowupSpec& spec) {
  detail::expect_emerald(spec, "color_emerald");
  return realize_classes(realize(spec), emerald_classes(spec.weights));
}

/// The bound that color_emerald_* meets: 11/9, or 7/6 when a bag is empty.
inline int emerald_budget(std::span<const int> w) {
  const int omega = omega_of(emerald(), w);
  return std::find(w.begin(), w.end(), 0) != w.end() ? seven_sixths(omega)
                                                     : eleven_ninths(omega);
}

}  // namespace chroma

#endif  // CHROMA_COLOR_EMERALD_HPP
