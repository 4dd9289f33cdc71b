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

#ifndef CHROMA_COLOR_SPEC_HPP
#define CHROMA_COLOR_SPEC_HPP

#include <string>

#include "chroma/color/bracelet.hpp"
#include "chroma/color/c7.hpp"
#include "chroma/color/emerald.hpp"
#include "chroma/structure/json.hpp"

namespace chroma {

struct SpecColoring {
  Graph graph;
  Coloring coloring;
  ColorBudget budget;
  std::string colorer;
};

namespace detail {

inline SpecColoring color_blowup_spec(const BlowupSpec& s) {
  const std::string& b = s.base_name;
  const int omega = omega_of(s.base, s.weights);
  SpecColoring r;
  r.graph = realize(s).graph;
  r.colorer = b;
  auto c7_family = [&](ClassList cl) {
    r.coloring = realize_classes(realize(s), cl);
    r.budget = ColorBudget::seven_sixths(omega);
  };
  if (b == "emerald" || b == "special_emerald") {
    r.coloring = color_emerald(s);
    const bool hole = std::find(s.weights.begin(), s.weights.end(), 0) != s.weights.end();
    r.budget = hole ? ColorBudget::seven_sixths(omega) : ColorBudget::eleven_ninths(omega);
    r.colorer = "emerald";
  } else if (b == "c7") {
    std::vector<int> w = s.weights;
    w.push_back(0);
    c7_family(c7_plus_v_classes(w));
  } else if (b == "c7v") {
    c7_family(c7_plus_v_classes(s.weights));
  } else if (b == "c7_2t" || b == "g9") {
    c7_family(c7_plus_2t_classes(s.weights));
  } else if (b == "gx") {
    c7_family(gx_classes(s.weights));
  } else if (b == "c7_2f") {
    c7_family(c7_plus_2f_classes(s.weights));
  } else if (b == "e_minus_8") {
    c7_family(e_minus_8_classes(s.weights));
  } else {
    throw InvalidInput("no colorer for base '" + b + "'");
  }
  return r;
}

}  // namespace detail

/// Colors a spec with the colorer of its family, against that family's budget.
inline SpecColoring color_spec(const AnySpec& spec) {
  if (const auto* b = std::get_if<BlowupSpec>(&spec)) return detail::color_blowup_spec(*b);
  const auto& br = std::get<BraceletSpec>(spec);
  SpecColoring r;
  r.graph = realize(br).graph;
  r.coloring = color_bracelet(br);
  r.budget = ColorBudget::seven_sixths(clique_number(r.graph).omega);
  r.colorer = "bracelet";
  return r;
}

}  // namespace chroma

#endif  // CHROMA_COLOR_SPEC_HPP
