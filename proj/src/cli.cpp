// Copyright 2026 The iasi Authors
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

#include "iasi/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "iasi/bounds.hpp"
#include "iasi/error.hpp"
#include "iasi/harness.hpp"
#include "iasi/json_io.hpp"
#include "iasi/search.hpp"
#include "iasi/transforms.hpp"
#include "iasi/verify.hpp"

namespace iasi {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

SetLabeling load_labeling(const std::string& path, std::uint64_t bound) {
  try {
    return parse_labeling(read_file(path), bound);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

struct Options {
  std::uint64_t universe_bound = kDefaultUniverseBound;
  bool json = false;

  std::string graph;
  std::string labels;

  // transform
  std::string op;
  std::string edge;
  std::string vertex;
  std::string out_prefix;

  // search
  std::string mode = "iasi";
  std::uint64_t ground_max = 0;
  std::optional<std::size_t> uniform;
  std::optional<std::size_t> max_label_size;
  bool minimize = false;
  std::optional<double> budget;
  std::optional<std::uint64_t> max_nodes;
  bool parallel = false;

  // bounds
  std::size_t n = 0;
  std::optional<std::size_t> l;

  // harness
  std::size_t max_n = 5;
  std::uint64_t seed = 1;
  std::optional<std::string> theorem;
  std::string out_file;
  bool serial = false;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const SetLabeling f = load_labeling(o.labels, o.universe_bound);
  const VerificationReport r = verify(g, f);
  if (o.json) {
    out << Json(r).dump(2) << '\n';
  } else {
    out << format_report(r);
  }
  return r.is_iasi ? kExitOk : kExitFailed;
}

EdgeId parse_edge_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == text.size()) {
    throw ParseError("--edge expects u,v", 0);
  }
  return EdgeId::make(text.substr(0, comma), text.substr(comma + 1));
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  std::optional<SetLabeling> f;
  if (!o.labels.empty()) f = load_labeling(o.labels, o.universe_bound);
  const SetLabeling* fp = f ? &*f : nullptr;

  TransformResult r;
  if (o.op == "line") {
    r = line_graph(g, fp);
  } else if (o.op == "total") {
    r = total_graph(g, fp);
  } else if (o.op == "contract") {
    if (o.edge.empty()) throw SpecError("--op contract needs --edge u,v");
    r = contract_edge(g, parse_edge_flag(o.edge), fp);
  } else {
    if (o.vertex.empty()) throw SpecError("--op reduce needs --vertex v");
    r = topological_reduction(g, o.vertex, fp);
  }

  const std::string graph_text = format_graph(r.graph);
  const std::string labels_text = r.induced_labeling ? format_labeling(*r.induced_labeling, r.graph) : "";
  const std::string provenance_text = format_provenance(r);
  if (!o.out_prefix.empty()) {
    write_file(o.out_prefix + ".graph", graph_text);
    if (r.induced_labeling) write_file(o.out_prefix + ".labels", labels_text);
    write_file(o.out_prefix + ".provenance", provenance_text);
  }
  if (o.json) {
    out << transform_to_json(r).dump(2) << '\n';
  } else if (o.out_prefix.empty()) {
    out << "# graph\n" << graph_text;
    if (r.induced_labeling) out << "# labels\n" << labels_text;
    out << "# provenance\n" << provenance_text;
    if (r.report) out << "# report\n" << format_report(*r.report);
  } else if (r.report) {
    out << format_report(*r.report);
  }
  return r.report && !r.report->is_iasi ? kExitFailed : kExitOk;
}

int status_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return kExitOk;
    case SearchStatus::exhausted: return kExitFailed;
    case SearchStatus::timeout: return kExitTimeout;
  }
  return kExitFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const SearchMode mode = search_mode_from_string(o.mode);
  std::optional<std::chrono::duration<double>> budget;
  if (o.budget) budget = std::chrono::duration<double>(*o.budget);

  if (o.minimize) {
    MinimalGroundOptions mo;
    mo.mode = mode;
    mo.uniform_vertex_size = o.uniform;
    mo.max_label_size = o.max_label_size;
    mo.max_ground = static_cast<std::size_t>(o.ground_max) + 1;
    mo.time_budget = budget;
    mo.node_budget = o.max_nodes;
    mo.parallel = o.parallel;
    mo.universe_bound = o.universe_bound;
    const MinimalGroundResult r = minimal_ground_set(g, mo);
    if (o.json) {
      out << Json(r).dump(2) << '\n';
    } else {
      out << "status: " << to_string(r.status) << '\n';
      out << "m: " << (r.m ? std::to_string(*r.m) : "-") << '\n';
      out << "lower_bound: " << r.lower_bound << '\n';
      out << "ground: " << (r.ground ? r.ground->to_string() : "-") << '\n';
      out << "nodes_expanded: " << r.outcome.nodes_expanded << '\n';
      if (r.outcome.labeling) out << format_labeling(*r.outcome.labeling, g);
    }
    return status_exit(r.status);
  }

  SearchSpec spec;
  spec.mode = mode;
  spec.ground = IntSet(o.universe_bound);
  for (std::uint64_t x = 0; x <= o.ground_max; ++x) spec.ground.insert(x);
  spec.max_label_size = o.max_label_size;
  spec.uniform_vertex_size = o.uniform;
  spec.time_budget = budget;
  spec.node_budget = o.max_nodes;
  spec.parallel = o.parallel;
  const SearchOutcome r = find_labeling(g, spec);
  if (o.json) {
    out << Json(r).dump(2) << '\n';
  } else {
    out << "status: " << to_string(r.status) << '\n';
    out << "nodes_expanded: " << r.nodes_expanded << '\n';
    if (r.labeling) out << format_labeling(*r.labeling, g);
  }
  return status_exit(r.status);
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const std::size_t lb = o.l ? uniform_ground_set_lower_bound(o.n, *o.l) : ground_set_lower_bound(o.n);
  if (o.json) {
    Json j{{"n", o.n}, {"lower_bound", lb}};
    if (o.l) j["l"] = *o.l;
    out << j.dump(2) << '\n';
  } else {
    out << lb << '\n';
  }
  return kExitOk;
}

int cmd_harness(const Options& o, std::ostream& out, std::ostream& err) {
  HarnessOptions ho;
  ho.max_n = o.max_n;
  ho.seed = o.seed;
  ho.theorem = o.theorem;
  ho.parallel = !o.serial;
  SuiteReport report;
  try {
    report = run_harness(ho);
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    err << "iasi: harness check errored: " << e.what() << '\n';
    return kExitFailed;
  }
  const std::string doc = suite_to_json(report).dump(2) + "\n";
  if (!o.out_file.empty()) write_file(o.out_file, doc);
  if (o.json) {
    out << doc;
  } else {
    out << format_suite(report);
  }
  return kExitOk;
}

int cmd_emit_dot(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  if (o.labels.empty()) {
    out << emit_dot(g);
  } else {
    const SetLabeling f = load_labeling(o.labels, o.universe_bound);
    out << emit_dot(g, &f);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Integer additive set-indexers: verify, transform, search, bounds, harness", "iasi"};
  app.require_subcommand(1);
  app.add_option("--universe-bound", o.universe_bound, "Largest integer a set or sumset may contain")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling of a graph");
  verify_cmd->add_option("graph", o.graph, "Edge-list file")->required();
  verify_cmd->add_option("labels", o.labels, "Labeling file")->required();
  verify_cmd->add_flag("--json", o.json, "Print the report as JSON");

  auto* transform_cmd = app.add_subcommand("transform", "Build a derived graph and its induced labeling");
  transform_cmd->add_option("--op", o.op, "Transform")
      ->required()
      ->check(CLI::IsMember({"line", "total", "contract", "reduce"}));
  transform_cmd->add_option("graph", o.graph, "Edge-list file")->required();
  transform_cmd->add_option("--labels", o.labels, "Labeling file");
  auto* edge_opt = transform_cmd->add_option("--edge", o.edge, "Edge to contract, as u,v");
  auto* vertex_opt = transform_cmd->add_option("--vertex", o.vertex, "Vertex to reduce");
  edge_opt->excludes(vertex_opt);
  transform_cmd->add_option("--out", o.out_prefix, "Write PREFIX.graph, PREFIX.labels, PREFIX.provenance");
  transform_cmd->add_flag("--json", o.json, "Print the result as JSON");

  auto* search_cmd = app.add_subcommand("search", "Search for a labeling over the ground {0..M}");
  search_cmd->add_option("graph", o.graph, "Edge-list file")->required();
  search_cmd->add_option("--mode", o.mode, "iasi, weak or strong")
      ->check(CLI::IsMember({"iasi", "weak", "strong"}));
  search_cmd->add_option("--ground-max", o.ground_max, "Largest ground element M")->required();
  search_cmd->add_option("--uniform", o.uniform, "Every vertex label has exactly L elements");
  search_cmd->add_option("--max-label-size", o.max_label_size, "Largest vertex label size");
  search_cmd->add_flag("--minimize", o.minimize, "Find the smallest prefix ground {0..m-1}, m <= M+1");
  search_cmd->add_option("--budget", o.budget, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-nodes", o.max_nodes, "Budget in attempted placements");
  search_cmd->add_flag("--parallel", o.parallel, "Split the top level across threads");
  search_cmd->add_flag("--json", o.json, "Print the outcome as JSON");

  auto* bounds_cmd = app.add_subcommand("bounds", "Smallest ground set size for n vertex labels");
  bounds_cmd->add_option("--n", o.n, "Number of vertices")->required();
  bounds_cmd->add_option("--l", o.l, "Uniform vertex label size");
  bounds_cmd->add_flag("--json", o.json, "Print as JSON");

  auto* harness_cmd = app.add_subcommand("harness", "Run the theorem suite over the small-graph corpus");
  harness_cmd->add_option("--max-n", o.max_n, "Largest enumerated graph order")->check(CLI::Range(2, 6));
  harness_cmd->add_option("--seed", o.seed, "Seed for random labelings");
  harness_cmd->add_option("--theorem", o.theorem, "Run one theorem, T1..T13");
  harness_cmd->add_flag("--json", o.json, "Print the JSON report instead of text");
  harness_cmd->add_option("--out", o.out_file, "Also write the JSON report to FILE");
  harness_cmd->add_flag("--serial", o.serial, "Run checks on one thread");

  auto* dot_cmd = app.add_subcommand("emit-dot", "Print the graph in DOT");
  dot_cmd->add_option("graph", o.graph, "Edge-list file")->required();
  dot_cmd->add_option("--labels", o.labels, "Labeling file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (transform_cmd->parsed()) return cmd_transform(o, out);
    if (search_cmd->parsed()) return cmd_search(o, out);
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    if (harness_cmd->parsed()) return cmd_harness(o, out, err);
    if (dot_cmd->parsed()) return cmd_emit_dot(o, out);
  } catch (const Error& e) {
    err << "iasi: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace iasi
