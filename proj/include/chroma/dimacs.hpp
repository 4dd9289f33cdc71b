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

#ifndef CHROMA_DIMACS_HPP
#define CHROMA_DIMACS_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct DimacsGraph {
  Graph graph;
  std::vector<std::string> comments;  // text after "c ", in file order
};

/// Reads `p edge n m` / `e u v` (1-indexed). Duplicate edges are tolerated;
/// the edge count in the header is not enforced beyond being non-negative.
inline DimacsGraph read_dimacs(std::istream& in) {
  DimacsGraph out;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "c") {
      std::string rest;
      std::getline(ss, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      out.comments.push_back(rest);
    } else if (tag == "p") {
      std::string format;
      long long n = -1, m = -1;
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (!(ss >> format >> n >> m) || (format != "edge" && format != "col") ||
          n < 0 || m < 0)
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      out.graph = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (!have_header) throw ParseError(lineno, "edge before problem line");
      if (!(ss >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
      const long long n = out.graph.size();
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(lineno, "edge endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      out.graph.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (tag != "c" && (ss >> extra))
      throw ParseError(lineno, "trailing tokens");
  }
  if (!have_header) throw ParseError(lineno, "missing problem line");
  return out;
}

inline DimacsGraph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << "p edge " << g.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

}  // namespace chroma

#endif  // CHROMA_DIMACS_HPP
