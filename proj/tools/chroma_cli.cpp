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

// chroma: check, color, gen and bench over DIMACS graphs and spec JSON.
// Exit codes: 0 ok, 1 usage or parse error, 2 domain negative (not in the
// class, no structure, generation failed), 3 budget, size guard or defect.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chroma/chroma.hpp"
#include "chroma/report.hpp"

namespace fs = std::filesystem;
using namespace chroma;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kGuard = 3 };

struct CliFailure {
  int code;
  std::string message;
};

struct Instance {
  std::string id;
  std::string family;
  std::optional<AnySpec> spec;
  Graph graph;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kUsage, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load(const std::string& path) {
  Instance inst;
  inst.id = fs::path(path).filename().string();
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw CliFailure{kUsage, path + ": " + e.what()};
    }
    inst.spec = spec_from_json(j);
    inst.family = j.contains("generator") ? j["generator"].value("family", "spec") : "spec";
    if (const auto* b = std::get_if<BraceletSpec>(&*inst.spec)) {
      const auto viol = validate_bracelet(*b);
      if (!viol.empty()) throw InvalidInput(path + ": invalid bracelet: " + viol.front().rule);
    }
    inst.graph = spec_graph(*inst.spec);
  } else {
    try {
      inst.graph = parse_dimacs(text).graph;
    } catch (const ParseError& e) {
      throw CliFailure{kUsage, path + ": " + e.what()};
    }
    inst.family = "dimacs";
  }
  return inst;
}

// Writes to `path`, or stdout when path is empty or "-".
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliFailure{kUsage, "cannot write " + path};
  write(out);
}

std::string witness_text(const std::vector<int>& w) {
  std::string s;
  for (int v : w) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

// ---- check ----------------------------------------------------------------

int cmd_check(const std::string& path, bool as_json) {
  const Instance inst = load(path);
  const FreenessReport r = check_freeness(inst.graph);
  if (as_json) {
    Json j{{"schema", kReportSchema}, {"instance", inst.id}, {"n", inst.graph.size()},
           {"free", r.is_free}};
    if (!r.is_free) {
      j["forbidden"] = to_string(*r.kind);
      Json w = Json::array();
      for (int v : r.witness) w.push_back(v + 1);
      j["witness"] = w;
    }
    std::cout << j.dump(2) << '\n';
  } else if (r.is_free) {
    std::cout << inst.id << ": (P7,C4,C5)-free, n=" << inst.graph.size() << '\n';
  } else {
    std::cout << inst.id << ": induced " << to_string(*r.kind) << " on vertices "
              << witness_text(r.witness) << '\n';
  }
  return r.is_free ? kOk : kDomain;
}

// ---- color ----------------------------------------------------------------

struct ColorOptions {
  std::string bound;  // "", "11/9", "7/6", "exact"
  bool verify = false;
  bool oracle = false;
};

std::optional<int> exact_chi(const Instance& inst) {
  if (inst.spec)
    if (const auto* b = std::get_if<BlowupSpec>(&*inst.spec); b && b->base.size() <= kMaxCoverBase)
      return blowup_chromatic_exact(b->base, b->weights).size;
  return chromatic_number_exact(inst.graph).k;
}

Coloring exact_coloring(const Instance& inst) {
  if (inst.spec)
    if (const auto* b = std::get_if<BlowupSpec>(&*inst.spec); b && b->base.size() <= kMaxCoverBase)
      return realize_classes(realize(*b), blowup_chromatic_exact(b->base, b->weights).classes());
  return chromatic_number_exact(inst.graph);
}

// Report plus coloring; throws chroma errors for the caller to map.
std::pair<RunReport, Coloring> run_color(const Instance& inst, const ColorOptions& o) {
  RunReport r;
  r.instance = inst.id;
  r.family = inst.family;
  r.n = inst.graph.size();
  const auto t0 = std::chrono::steady_clock::now();
  r.omega = clique_number(inst.graph).omega;
  Coloring c;
  ColorBudget budget;
  if (o.bound == "exact") {
    c = exact_coloring(inst);
    budget = ColorBudget::exact(r.omega, c.k);
    r.colorer = "exact";
  } else if (inst.spec) {
    SpecColoring sc = color_spec(*inst.spec);
    c = std::move(sc.coloring);
    budget = sc.budget;
    r.colorer = sc.colorer;
  } else {
    c = color_graph(inst.graph);
    budget = ColorBudget::eleven_ninths(r.omega);
    r.colorer = "driver";
  }
  if (o.bound == "11/9") budget = ColorBudget::eleven_ninths(r.omega);
  if (o.bound == "7/6") budget = ColorBudget::seven_sixths(r.omega);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.colors = c.k;
  r.budget = budget.budget;
  r.bound_kind = budget.kind;
  r.verified = verify_coloring(inst.graph, c).proper;
  if (o.verify && r.verified) {
    // Independent pass over every pair, not just the edge list.
    for (int u = 0; u < r.n && r.verified; ++u)
      for (int v = u + 1; v < r.n; ++v)
        if (inst.graph.adjacent(u, v) && c.color[u] == c.color[v]) r.verified = false;
  }
  if (o.oracle) r.oracle_chi = exact_chi(inst);
  return {r, c};
}

int report_exit(const RunReport& r) {
  if (!r.verified || r.colors > r.budget) return kGuard;
  if (r.oracle_chi && *r.oracle_chi > r.colors) return kGuard;
  return kOk;
}

int cmd_color(const std::string& path, const ColorOptions& o, const std::string& out,
              const std::string& report_out, bool csv) {
  const Instance inst = load(path);
  auto [r, c] = run_color(inst, o);
  emit(out, [&](std::ostream& s) { write_coloring(s, c); });
  auto write_report = [&](std::ostream& s) {
    if (csv)
      s << report_csv_header() << '\n' << report_csv_row(r) << '\n';
    else
      s << report_json(r).dump(2) << '\n';
  };
  if (report_out.empty())
    write_report(std::cerr);
  else
    emit(report_out, write_report);
  return report_exit(r);
}

// ---- gen ------------------------------------------------------------------

int cmd_gen(const GenConfig& c, const std::string& out) {
  const GeneratedSpec s = gen(c);
  emit(out, [&](std::ostream& o) { o << fixture_json(c, s).dump(2) << '\n'; });
  return kOk;
}

// ---- bench ----------------------------------------------------------------

int cmd_bench(const std::string& dir, int jobs, const ColorOptions& o, const std::string& out,
              const std::string& summary) {
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".json" || ext == ".col")) files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<RunReport> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      RunReport& r = rows[i];
      try {
        r = run_color(load(files[i]), o).first;
      } catch (const CliFailure& e) {
        r.instance = fs::path(files[i]).filename().string();
        r.error = e.message;
      } catch (const std::exception& e) {
        r.instance = fs::path(files[i]).filename().string();
        r.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  emit(out, [&](std::ostream& s) {
    s << report_csv_header() << '\n';
    for (const auto& r : rows) s << report_csv_row(r) << '\n';
  });
  auto write_summary = [&](std::ostream& s) {
    s << "family,count,mean_ms,max_ms\n";
    for (const auto& [f, t] : timing_by_family(rows))
      s << f << ',' << t.count << ',' << t.mean_ms << ',' << t.max_ms << '\n';
  };
  if (summary.empty())
    write_summary(std::cerr);
  else
    emit(summary, write_summary);
  int code = kOk;
  for (const auto& r : rows) code = std::max(code, r.error.empty() ? report_exit(r) : kDomain);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chroma: coloring (P7,C4,C5)-free graphs within ceil(11w/9)"};
  app.require_subcommand(1);

  std::string path, out, report_out, summary;
  bool as_json = false, csv = false;
  ColorOptions co;
  GenConfig gc;
  int jobs = 1;

  auto* check = app.add_subcommand("check", "Test (P7,C4,C5)-freeness; exit 2 with a witness if not");
  check->add_option("path", path, "DIMACS .col or spec JSON")->required();
  check->add_flag("--json", as_json, "Print the report as JSON");

  auto* color = app.add_subcommand("color", "Color a graph or spec and report");
  color->add_option("path", path, "DIMACS .col or spec JSON")->required();
  color->add_option("--bound", co.bound, "Budget to check against (default: the family bound)")
      ->check(CLI::IsMember({"11/9", "7/6", "exact"}));
  color->add_flag("--verify", co.verify, "Re-check every vertex pair independently");
  color->add_flag("--oracle", co.oracle, "Also compute the exact chromatic number");
  color->add_option("-o,--out", out, "Coloring output file (default stdout)");
  color->add_option("--report", report_out, "Report output file (default stderr)");
  color->add_flag("--csv", csv, "Report as CSV instead of JSON");

  auto* g = app.add_subcommand("gen", "Generate a fixture spec");
  g->add_option("family", gc.family, "Generator family")->required()->check(
      CLI::IsMember(gen_families()));
  g->add_option("--seed", gc.seed, "PRNG seed");
  g->add_option("-t", gc.t, "Equal bag size");
  g->add_option("-x", gc.x, "x parameter");
  g->add_option("-y", gc.y, "y parameter");
  g->add_option("-r", gc.r, "r parameter");
  g->add_option("-s", gc.s, "s parameter");
  g->add_option("-p", gc.p, "p parameter (|L8|)");
  g->add_option("--wmin", gc.wmin, "Minimum random weight");
  g->add_option("--wmax", gc.wmax, "Maximum random weight");
  g->add_option("--max-bag", gc.max_bag, "Maximum bracelet bag size");
  g->add_flag("--equal-bags", gc.equal_bags, "All bracelet bags of size max-bag");
  g->add_flag("--require-cross", gc.require_cross, "All three uncertain pairs signed");
  g->add_option("--max-attempts", gc.max_attempts, "Rejection sampling attempts");
  g->add_option("-o,--out", out, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Color every fixture in a directory; CSV out");
  bench->add_option("dir", path, "Fixture directory")->required()->check(CLI::ExistingDirectory);
  bench->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--bound", co.bound, "Budget to check against")
      ->check(CLI::IsMember({"11/9", "7/6", "exact"}));
  bench->add_flag("--oracle", co.oracle, "Also compute exact chromatic numbers");
  bench->add_option("-o,--out", out, "CSV output file (default stdout)");
  bench->add_option("--summary", summary, "Per-family timing CSV (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(path, as_json);
    if (*color) return cmd_color(path, co, out, report_out, csv);
    if (*g) return cmd_gen(gc, out);
    if (*bench) return cmd_bench(path, jobs, co, out, summary);
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const NotInClass& e) {
    std::cerr << "not in class: " << to_string(*e.report().kind) << " on vertices "
              << witness_text(e.report().witness) << '\n';
    return kDomain;
  } catch (const StructureUnavailable& e) {
    std::cerr << "structure unavailable: " << e.what() << '\n';
    return kDomain;
  } catch (const GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << " (attempts: " << e.attempts() << ")\n";
    return kDomain;
  } catch (const SizeGuard& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kGuard;
  } catch (const BudgetExceeded& e) {
    std::cerr << "search budget exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kGuard;
  }
  return kUsage;
}
