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

#ifndef CHROMA_REPORT_HPP
#define CHROMA_REPORT_HPP

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chroma/oracle/coloring.hpp"
#include "chroma/structure/json.hpp"

namespace chroma {

inline constexpr int kReportSchema = 1;

struct RunReport {
  std::string instance;
  std::string family;  // generator family, "dimacs" for plain graphs
  int n = 0;
  int omega = 0;
  int colors = 0;
  int budget = 0;
  BoundKind bound_kind = BoundKind::ElevenNinths;
  double elapsed_ms = 0;
  bool verified = false;
  std::optional<int> oracle_chi;
  std::string colorer;
  std::string error;  // empty on success
};

/// CSV columns, in order.
inline const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> c{"instance", "family",  "n",          "omega",
                                          "colors",   "budget",  "bound_kind", "elapsed_ms",
                                          "verified", "oracle_chi", "colorer", "error"};
  return c;
}

inline Json report_json(const RunReport& r) {
  Json j{{"schema", kReportSchema},
         {"instance", r.instance},
         {"family", r.family},
         {"n", r.n},
         {"omega", r.omega},
         {"colors", r.colors},
         {"budget", r.budget},
         {"bound_kind", to_string(r.bound_kind)},
         {"elapsed_ms", r.elapsed_ms},
         {"verified", r.verified},
         {"colorer", r.colorer}};
  j["oracle_chi"] = r.oracle_chi ? Json(*r.oracle_chi) : Json(nullptr);
  j["gap"] = r.oracle_chi ? Json(r.colors - *r.oracle_chi) : Json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace detail

inline std::string report_csv_header() {
  std::string s;
  for (const auto& c : report_columns()) s += (s.empty() ? "" : ",") + c;
  return s;
}

inline std::string report_csv_row(const RunReport& r) {
  std::ostringstream ms;
  ms.setf(std::ios::fixed);
  ms.precision(3);
  ms << r.elapsed_ms;
  const std::vector<std::string> f{detail::csv_field(r.instance),
                                   r.family,
                                   std::to_string(r.n),
                                   std::to_string(r.omega),
                                   std::to_string(r.colors),
                                   std::to_string(r.budget),
                                   to_string(r.bound_kind),
                                   ms.str(),
                                   r.verified ? "true" : "false",
                                   r.oracle_chi ? std::to_string(*r.oracle_chi) : "",
                                   r.colorer,
                                   detail::csv_field(r.error)};
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i];
  return s;
}

struct FamilyTiming {
  int count = 0;
  double mean_ms = 0;
  double max_ms = 0;
};

inline std::map<std::string, FamilyTiming> timing_by_family(const std::vector<RunReport>& rs) {
  std::map<std::string, FamilyTiming> out;
  for (const auto& r : rs) {
    auto& t = out[r.family];
    t.mean_ms += r.elapsed_ms;
    t.max_ms = std::max(t.max_ms, r.elapsed_ms);
    ++t.count;
  }
  for (auto& [f, t] : out) t.mean_ms /= t.count;
  return out;
}

/// `s <k>` then one `v <vertex> <color>` line per vertex, 1-based.
inline void write_coloring(std::ostream& out, const Coloring& c) {
  out << "s " << c.k << '\n';
  for (std::size_t v = 0; v < c.color.size(); ++v) out << "v " << v + 1 << ' ' << c.color[v] << '\n';
}

}  // namespace chroma

#endif  // CHROMA_REPORT_HPP
