// Copyright 2026 The eon-spectra Authors
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

// eon-spectra: command-line front end for the eon core library.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eon/conflict.h"
#include "eon/error.h"
#include "eon/gof.h"
#include "eon/harness.h"
#include "eon/json_io.h"
#include "eon/rsa.h"
#include "eon/topology.h"

namespace eon {
namespace {

// Scenario flags shared by simulate, sweep, cm and route. Unset optionals
// keep the preset (or default) value.
struct ScenarioFlags {
  std::string preset;
  std::optional<std::string> topology;
  std::optional<std::string> traffic;
  std::optional<std::string> dc;
  std::optional<double> dc_mass;
  std::optional<int> k;
  std::optional<double> p1;
  std::vector<double> scheme;
  std::optional<int> n;
  std::optional<int> reps;
  std::optional<int> alpha;
  std::optional<int> beta;
  std::optional<int> gb;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> order;
  int threads = 1;
};

void AddScenarioFlags(CLI::App* app, ScenarioFlags& f) {
  app->add_option("--preset", f.preset,
                  "R-U, NSF-U, NJ-U, R-W, NSF-W, NJ-W or EX1");
  app->add_option("--topology", f.topology,
                  "ring12, nsfnet14, njlata11, cycle<N> or a topology file");
  app->add_option("--traffic", f.traffic,
                  "uniform, weighted, weighted:A,B[@MASS], pair:S,D or file:PATH");
  app->add_option("--dc", f.dc, "data-centre pair A,B for weighted traffic");
  app->add_option("--dc-mass", f.dc_mass, "node mass of each data centre")
      ->check(CLI::Range(0.0, 0.5));
  app->add_option("--k", f.k, "candidate paths per pair")
      ->check(CLI::PositiveNumber);
  app->add_option("--p1", f.p1, "first-path probability (k = 2)")
      ->check(CLI::Range(0.0, 1.0));
  app->add_option("--scheme", f.scheme, "routing probabilities, one per path")
      ->delimiter(',');
  app->add_option("--n", f.n, "requests per replication")
      ->check(CLI::PositiveNumber);
  app->add_option("--reps", f.reps, "replications")->check(CLI::PositiveNumber);
  app->add_option("--alpha", f.alpha, "smallest bandwidth in FS");
  app->add_option("--beta", f.beta, "largest bandwidth in FS");
  app->add_option("--gb", f.gb, "guard band in FS");
  app->add_option("--seed", f.seed, "master seed");
  app->add_option("--order", f.order,
                  "first-fit order: input, descending-weight, descending-degree");
  app->add_option("--threads", f.threads, "worker threads")
      ->check(CLI::PositiveNumber);
}

ScenarioConfig BuildConfig(const ScenarioFlags& f) {
  ScenarioConfig c = f.preset.empty() ? ScenarioConfig{} : FindPreset(f.preset);
  if (f.topology) c.topology = *f.topology;
  if (f.traffic) {
    c.traffic = *f.traffic == "weighted"
                    ? TrafficSpec{TrafficKind::kWeighted, 0, 0, 0.45, {}}
                    : ParseTrafficSpec(*f.traffic);
  }
  if (f.dc) {
    const TrafficSpec dc = ParseTrafficSpec("weighted:" + *f.dc);
    c.traffic.kind = TrafficKind::kWeighted;
    c.traffic.node_a = dc.node_a;
    c.traffic.node_b = dc.node_b;
  }
  if (f.dc_mass) c.traffic.dc_mass = *f.dc_mass;
  if (c.traffic.kind == TrafficKind::kWeighted && c.traffic.node_a == 0) {
    throw Error(ErrorCode::kInvalidParameter, "weighted traffic needs --dc A,B");
  }
  if (f.k) c.k = *f.k;
  if (f.p1 && !f.scheme.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "give --p1 or --scheme, not both");
  }
  if (f.p1) {
    if (c.k != 2) {
      throw Error(ErrorCode::kInvalidParameter, "--p1 needs k = 2");
    }
    c.scheme = {*f.p1, 1.0 - *f.p1};
  }
  if (!f.scheme.empty()) c.scheme = f.scheme;
  if (f.n) c.n_requests = *f.n;
  if (f.reps) c.replications = *f.reps;
  if (f.alpha) c.alpha = *f.alpha;
  if (f.beta) c.beta = *f.beta;
  if (f.gb) c.gb = *f.gb;
  if (f.seed) c.seed = *f.seed;
  if (f.order) {
    const auto order = ParseFirstFitOrder(*f.order);
    if (!order) {
      throw Error(ErrorCode::kInvalidParameter, "unknown order " + *f.order);
    }
    c.order = *order;
  }
  c.threads = f.threads;
  ValidateConfig(c);
  return c;
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidParameter, "cannot read " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidParameter, "cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

ExportFormat FormatFor(const std::string& format, const std::string& path) {
  if (format == "json") return ExportFormat::kJson;
  if (format == "csv") return ExportFormat::kCsv;
  return std::filesystem::path(path).extension() == ".csv" ? ExportFormat::kCsv
                                                           : ExportFormat::kJson;
}

void Emit(std::span<const ScenarioResult> results, const std::string& out,
          const std::string& format) {
  const ExportFormat f = FormatFor(format, out);
  if (out.empty() || out == "-") {
    WriteText("", f == ExportFormat::kCsv ? ResultsToCsv(results)
                                          : ResultsToJson(results));
  } else {
    ExportResults(results, f, out);
  }
}

void PrintSummary(const ScenarioResult& r) {
  std::fprintf(stderr, "%s p=(", r.config.name.c_str());
  const RoutingScheme scheme = SchemeOf(r.config);
  for (int i = 0; i < scheme.k(); ++i) {
    std::fprintf(stderr, "%s%.4g", i ? ", " : "", scheme[i]);
  }
  std::fprintf(stderr, ")  MUFI %.2f +/- %.2f", r.mean_mufi, r.mufi_ci);
  if (r.mean_p_emp) {
    std::fprintf(stderr, "  p_emp %.4f +/- %.4f", *r.mean_p_emp, *r.p_emp_ci);
  }
  std::fprintf(stderr, "  p_theory %.4f\n", r.p_theory);
  for (const std::string& w : r.warnings) {
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  }
}

std::string AlignedMatrix(const ConflictMatrix& cm) {
  std::string text;
  char cell[32];
  for (int i = 0; i < cm.k(); ++i) {
    for (int j = 0; j < cm.k(); ++j) {
      std::snprintf(cell, sizeof cell, "%s%.6f", j ? "  " : "", cm(i, j));
      text += cell;
    }
    text += '\n';
  }
  return text;
}

// JSON text inline, or a path to a JSON file.
std::string JsonArgument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    return arg;
  }
  return ReadText(arg);
}

ConflictGraph LoadGraph(const std::string& graph, const std::string& routed,
                        const std::string& topology) {
  if (!graph.empty()) return ConflictGraphFromJson(ReadText(graph));
  if (!routed.empty()) {
    if (topology.empty()) {
      throw Error(ErrorCode::kInvalidParameter, "--routed needs --topology");
    }
    return BuildConflictGraph(
        RoutedRequestsFromJson(ReadText(routed), ResolveTopology(topology)));
  }
  throw Error(ErrorCode::kInvalidParameter, "give --graph or --routed");
}

int Run(int argc, char** argv) {
  CLI::App app{"Conflict-coefficient, routing-scheme and spectrum-usage "
               "analysis for elastic optical networks"};
  app.set_config("--config", "", "TOML or INI file mirroring the flags");
  app.require_subcommand(1);
  app.fallthrough();

  std::string out;
  std::string format;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv (default from extension)")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  ScenarioFlags flags;

  CLI::App* simulate = app.add_subcommand("simulate", "run one scenario");
  AddScenarioFlags(simulate, flags);
  add_output(simulate);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep p1 over a grid (k = 2)");
  AddScenarioFlags(sweep, flags);
  add_output(sweep);
  std::vector<double> grid;
  sweep->add_option("--grid", grid, "p1 values (default 0, 0.1, ..., 1)")
      ->delimiter(',');

  CLI::App* table = app.add_subcommand(
      "table-pmin", "minimum intersecting probability of the six presets");
  bool table_json = false;
  table->add_flag("--json", table_json, "print JSON instead of text");

  CLI::App* cm_cmd = app.add_subcommand("cm", "conflict matrix of a scenario");
  AddScenarioFlags(cm_cmd, flags);

  CLI::App* gof = app.add_subcommand("gof", "minimize the intersecting probability");
  std::string cm_arg;
  bool k2_closed_form = false;
  gof->add_option("--cm", cm_arg, "conflict matrix as JSON text or JSON file")
      ->required();
  gof->add_flag("--k2-closed-form", k2_closed_form, "use the 2x2 closed form");

  CLI::App* route = app.add_subcommand(
      "route", "sample and route one replication's requests");
  AddScenarioFlags(route, flags);
  add_output(route);
  std::string graph_out;
  int replication = 0;
  route->add_option("--graph-out", graph_out, "also write the conflict graph");
  route->add_option("--replication", replication, "replication index")
      ->check(CLI::NonNegativeNumber);

  std::string graph_in, routed_in, topology_in;
  int gb = 1;
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_in, "conflict graph JSON");
    sub->add_option("--routed", routed_in, "routed requests JSON");
    sub->add_option("--topology", topology_in, "topology for --routed");
    sub->add_option("--gb", gb, "guard band in FS")->check(CLI::NonNegativeNumber);
  };

  CLI::App* assign = app.add_subcommand("assign", "assign spectrum to a conflict graph");
  add_graph_input(assign);
  add_output(assign);
  std::string method = "first-fit";
  std::string assign_order = "descending-weight";
  assign->add_option("--method", method, "first-fit, greedy-coloring or exact-coloring")
      ->check(CLI::IsMember({"first-fit", "greedy-coloring", "exact-coloring"}));
  assign->add_option("--order", assign_order, "first-fit order");

  CLI::App* bounds = app.add_subcommand("bounds", "MUFI bounds from the chromatic number");
  add_graph_input(bounds);
  int alpha = 0, beta = 0;
  bounds->add_option("--alpha", alpha, "bandwidth range low end for the range pair");
  bounds->add_option("--beta", beta, "bandwidth range high end for the range pair");

  CLI::App* oracle = app.add_subcommand("oracle", "exact minimum MUFI of a small graph");
  add_graph_input(oracle);
  int cap = 0;
  oracle->add_option("--cap", cap, "largest MUFI searched (0 = serial bound)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (simulate->parsed()) {
    const ScenarioResult r = RunScenario(BuildConfig(flags));
    PrintSummary(r);
    Emit(std::span(&r, 1), out, format);
  } else if (sweep->parsed()) {
    ScenarioConfig c = BuildConfig(flags);
    if (grid.empty()) grid = DefaultP1Grid();
    const auto results = SweepP1(c, grid);
    for (const auto& r : results) PrintSummary(r);
    Emit(results, out, format);
  } else if (table->parsed()) {
    const MinimumProbabilityTable t = ComputeMinimumProbabilityTable();
    if (table_json) {
      std::string text = "{\"entries\":[";
      for (std::size_t i = 0; i < t.entries.size(); ++i) {
        text += (i ? "," : "") + std::string("{\"scenario\":\"") +
                t.entries[i].scenario + "\",\"cm\":" +
                ConflictMatrixToJson(t.entries[i].cm) +
                ",\"solution\":" + GofSolutionToJson(t.entries[i].solution) + "}";
      }
      text += "],\"increasing_order\":[";
      for (std::size_t i = 0; i < t.increasing_order.size(); ++i) {
        text += (i ? ",\"" : "\"") + t.increasing_order[i] + "\"";
      }
      WriteText("", text + "]}");
    } else {
      std::printf("%-8s %8s  %-18s %s\n", "scenario", "p_min", "scheme",
                  "certificate");
      for (const auto& e : t.entries) {
        std::printf("%-8s %7.2f%%  (%.4f, %.4f)   %s\n", e.scenario.c_str(),
                    100.0 * e.solution.p_min, e.solution.scheme[0],
                    e.solution.scheme[1],
                    std::string(CertificateName(e.solution.certificate)).c_str());
      }
      std::string order;
      for (std::size_t i = 0; i < t.increasing_order.size(); ++i) {
        order += (i ? " < " : "") + t.increasing_order[i];
      }
      std::printf("increasing: %s\n", order.c_str());
    }
  } else if (cm_cmd->parsed()) {
    const PreparedScenario p = PrepareScenario(BuildConfig(flags));
    std::cout << AlignedMatrix(p.cm) << ConflictMatrixToJson(p.cm) << '\n';
  } else if (gof->parsed()) {
    const ConflictMatrix cm = ConflictMatrixFromJson(JsonArgument(cm_arg));
    const GofSolution s = k2_closed_form ? MinimizeGofK2(cm) : MinimizeGof(cm);
    std::cout << GofSolutionToJson(s) << '\n';
  } else if (route->parsed()) {
    const ScenarioConfig c = BuildConfig(flags);
    const PreparedScenario p = PrepareScenario(c);
    const std::uint64_t seed = ReplicationSeed(c, replication);
    Rng traffic_rng = MakeStream(seed, StreamTag::kTraffic);
    Rng routing_rng = MakeStream(seed, StreamTag::kRouting);
    const auto requests =
        SampleRequests(p.traffic, c.alpha, c.beta, c.n_requests, traffic_rng);
    const auto routed = RouteRequests(requests, p.table, SchemeOf(c), routing_rng);
    WriteText(out, RoutedRequestsToJson(routed));
    if (!graph_out.empty()) {
      WriteText(graph_out, ConflictGraphToJson(BuildConflictGraph(routed)));
    }
  } else if (assign->parsed()) {
    const ConflictGraph g = LoadGraph(graph_in, routed_in, topology_in);
    SpectrumAssignment a;
    if (method == "first-fit") {
      const auto order = ParseFirstFitOrder(assign_order);
      if (!order) {
        throw Error(ErrorCode::kInvalidParameter, "unknown order " + assign_order);
      }
      a = FirstFitAssignment(g, gb, *order);
    } else {
      const Coloring c =
          method == "exact-coloring" ? ExactColoring(g) : GreedyColoring(g);
      a = ColoringToAssignment(g, c, gb);
    }
    const ValidationReport report = ValidateAssignment(g, a, gb);
    if (!report.ok()) {
      throw Error(ErrorCode::kInvariant,
                  "invalid assignment: " + report.violations.front().message);
    }
    WriteText(out, AssignmentToJson(a, gb));
  } else if (bounds->parsed()) {
    const ConflictGraph g = LoadGraph(graph_in, routed_in, topology_in);
    const bool exact = g.size() <= kMaxExactChromaticVertices;
    const int chi = exact ? ExactChromatic(g) : GreedyColoring(g).num_colors;
    const MufiBounds b = ComputeMufiBounds(g, chi, gb);
    std::string text = "{\"chromatic\":" + std::to_string(chi) +
                       ",\"chromatic_exact\":" + (exact ? "true" : "false") +
                       ",\"lower\":" + std::to_string(b.lower) +
                       ",\"upper\":" + std::to_string(b.upper);
    if (alpha > 0 && beta >= alpha) {
      const auto [lo, hi] = RangeMufiBounds(chi, gb, alpha, beta);
      text += ",\"range_lower\":" + std::to_string(lo) +
              ",\"range_upper\":" + std::to_string(hi);
    } else {
      text += ",\"range_lower\":" + std::to_string(b.range_lower) +
              ",\"range_upper\":" + std::to_string(b.range_upper);
    }
    WriteText("", text + "}");
  } else if (oracle->parsed()) {
    const ConflictGraph g = LoadGraph(graph_in, routed_in, topology_in);
    WriteText("", "{\"optimal_mufi\":" +
                      std::to_string(BruteForceOptimalMufi(g, gb, cap)) + "}");
  }
  return 0;
}

}  // namespace
}  // namespace eon

int main(int argc, char** argv) {
  try {
    return eon::Run(argc, argv);
  } catch (const eon::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return e.code() == eon::ErrorCode::kInvariant ? 2 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
