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

#ifndef CHROMA_STRUCTURE_JSON_HPP
#define CHROMA_STRUCTURE_JSON_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "chroma/structure/blowup.hpp"
#include "chroma/structure/bracelet.hpp"

namespace chroma {

using Json = nlohmann::json;  // std::map backed, so keys serialize sorted
using AnySpec = std::variant<BlowupSpec, BraceletSpec>;

inline Json spec_to_json(const BlowupSpec& s) {
  Json w = Json::object();
  for (int v = 0; v < s.base.size(); ++v) w[s.base.label(v)] = s.weights[v];
  return {{"kind", "blowup"}, {"base", s.base_name}, {"weights", w}};
}

inline Json spec_to_json(const BraceletSpec& s) {
  Json bags = Json::object();
  for (int p = 0; p < kParts; ++p) bags[kPartNames[p]] = s.size[p];
  Json cross = Json::object();
  for (const auto& cr : kCross) {
    Json rel = Json::array();
    for (auto [u, v] : s.*cr.rel) rel.push_back({u, v});
    cross[cr.name] = rel;
  }
  return {{"kind", "bracelet"}, {"bags", bags}, {"cross", cross}};
}

inline Json spec_to_json(const AnySpec& s) {
  return std::visit([](const auto& x) { return spec_to_json(x); }, s);
}

namespace detail {

inline const Json& member(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

inline int as_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 1000000)
    throw InvalidInput(where + ": expected a nonnegative integer");
  return j.get<int>();
}

inline BlowupSpec blowup_from_json(const Json& j) {
  const Json& base = member(j, "base", "blowup spec");
  if (!base.is_string()) throw InvalidInput("blowup spec: \"base\" must be a string");
  const std::string name = base.get<std::string>();
  const Graph& g = base_by_name(name);
  const Json& w = member(j, "weights", "blowup spec");
  if (!w.is_object()) throw InvalidInput("blowup spec: \"weights\" must be an object");
  std::vector<int> weights(g.size(), -1);
  for (const auto& [label, val] : w.items()) {
    int v = -1;
    for (int u = 0; u < g.size(); ++u)
      if (g.label(u) == label) v = u;
    if (v < 0) throw InvalidInput("blowup spec: unknown vertex \"" + label + "\" for base " + name);
    weights[v] = as_count(val, "blowup spec weight \"" + label + "\"");
  }
  for (int u = 0; u < g.size(); ++u)
    if (weights[u] < 0)
      throw InvalidInput("blowup spec: no weight for vertex \"" + g.label(u) + "\"");
  return BlowupSpec::named(name, std::move(weights));
}

inline BraceletSpec bracelet_from_json(const Json& j) {
  BraceletSpec s;
  const Json& bags = member(j, "bags", "bracelet spec");
  if (!bags.is_object()) throw InvalidInput("bracelet spec: \"bags\" must be an object");
  for (const auto& [name, val] : bags.items()) {
    s.size[part_by_name(name)] = as_count(val, "bracelet part \"" + name + "\"");
  }
  if (j.contains("cross")) {
    const Json& cross = j.at("cross");
    if (!cross.is_object()) throw InvalidInput("bracelet spec: \"cross\" must be an object");
    for (const auto& [name, val] : cross.items()) {
      const CrossInfo* info = nullptr;
      for (const auto& cr : kCross)
        if (name == cr.name) info = &cr;
      if (!info) throw InvalidInput("bracelet spec: unknown cross relation \"" + name + "\"");
      if (!val.is_array()) throw InvalidInput("bracelet spec: \"" + name + "\" must be an array");
      for (const auto& e : val) {
        if (!e.is_array() || e.size() != 2)
          throw InvalidInput("bracelet spec: \"" + name + "\" entries must be [u, v]");
        (s.*info->rel).push_back({as_count(e[0], name), as_count(e[1], name)});
      }
    }
  }
  return s;
}

}  // namespace detail

/// Accepts a bare spec or a fixture object carrying it under "spec".
inline AnySpec spec_from_json(const Json& j) {
  const Json& s = (j.is_object() && j.contains("spec")) ? j.at("spec") : j;
  const Json& kind = detail::member(s, "kind", "spec");
  if (kind == "blowup") return detail::blowup_from_json(s);
  if (kind == "bracelet") return detail::bracelet_from_json(s);
  throw InvalidInput("spec: unknown kind " + kind.dump());
}

inline AnySpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
  return spec_from_json(j);
}

inline Graph spec_graph(const AnySpec& s) {
  return std::visit([](const auto& x) { return realize(x).graph; }, s);
}

}  // namespace chroma

#endif  // CHROMA_STRUCTURE_JSON_HPP
