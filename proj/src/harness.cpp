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

#include "iasi/harness.hpp"

#include <algorithm>
#include <exception>
#include <array>
#include <functional>
#include <sstream>

#include "iasi/bounds.hpp"
#include "iasi/error.hpp"
#include "iasi/labeling.hpp"
#include "iasi/search.hpp"
#include "iasi/transforms.hpp"
#include "iasi/verify.hpp"

namespace iasi {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::counterexample: return "counterexample";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"T1", "T2", "T3", "T4",  "T5",  "T6", "T7",
                                            "T8", "T9", "T10", "T11", "T12", "T13"};
  return ids;
}

namespace {

// ---------------------------------------------------------------------------
// Observations. Every check derives its verdict from one of these, and replay
// recomputes the same JSON from the serialized instance.

IntSet union_of(const SetLabeling& f) {
  IntSet out;
  for (const auto& [name, label] : f) label.for_each([&](std::uint64_t x) { out.insert(x); });
  return out;
}

Json search_observation(const Graph& g, SearchMode mode, const IntSet& ground,
                        std::optional<std::size_t> uniform, std::optional<std::uint64_t> budget) {
  if (ground.size() > kMaxSearchGround) return Json{{"status", "skipped"}};
  SearchSpec spec;
  spec.mode = mode;
  spec.ground = ground;
  spec.uniform_vertex_size = uniform;
  spec.node_budget = budget;
  const SearchOutcome o = find_labeling(g, spec);
  return Json{{"status", std::string(to_string(o.status))},
              {"nodes_expanded", o.nodes_expanded},
              {"labeling", o.labeling ? Json(*o.labeling) : Json()}};
}

std::optional<std::uint64_t> budget_of(const Json& params) {
  if (params.contains("node_budget")) return params.at("node_budget").get<std::uint64_t>();
  return std::nullopt;
}

bool mono(const IntSet& s) { return s.is_singleton(); }

bool every_adjacent_pair_has_mono_edge(const Graph& g, const VerificationReport& r) {
  auto is_mono = [&](std::size_t edge) {
    const EdgeId id = g.edge_id(edge);
    return std::binary_search(r.mono_indexed_edges.begin(), r.mono_indexed_edges.end(), id);
  };
  for (const auto& [i, j] : g.adjacent_edge_index_pairs()) {
    if (!is_mono(i) && !is_mono(j)) return false;
  }
  return true;
}

// Named side conditions some checks compare against.
bool side_condition(const std::string& name, const Graph& g, const SetLabeling& f) {
  const VerificationReport r = verify(g, f);
  if (name == "adjacent-edges-mono") return every_adjacent_pair_has_mono_edge(g, r);
  if (name == "one-uniform") return r.uniformity == 1;
  throw SpecError("unknown condition '" + name + "'");
}

Json observe(const std::string& kind, const Graph& g, const SetLabeling* f, const Json& params) {
  auto need_f = [&]() -> const SetLabeling& {
    if (f == nullptr) throw SpecError("observation '" + kind + "' needs a labeling");
    return *f;
  };
  if (kind == "canonical") {
    return Json{{"report", verify(g, canonical_iasi(g))}};
  }
  if (kind == "admits") {
    // any IASI at all on the derived graph, via the canonical construction
    const std::string of = params.at("of").get<std::string>();
    Graph h;
    if (of == "contract") {
      h = contract_edge(g, params.at("edge").get<EdgeId>()).graph;
    } else if (of == "reduce") {
      h = topological_reduction(g, params.at("vertex").get<std::string>()).graph;
    } else if (of == "line") {
      h = line_graph(g).graph;
    } else {
      h = total_graph(g).graph;
    }
    // powers of two up to 2^(n-1); sums need one more bit
    const std::uint64_t bound = std::max<std::uint64_t>(kDefaultUniverseBound, std::uint64_t{1} << h.vertex_count());
    return Json{{"report", verify(h, canonical_iasi(h, bound))}};
  }
  if (kind == "restrict") {
    const Graph h = params.contains("edge")
                        ? without_edge(g, params.at("edge").get<EdgeId>())
                        : without_vertex(g, params.at("vertex").get<std::string>());
    return Json{{"report", verify(h, restrict(g, need_f(), h))}};
  }
  if (kind == "contract") {
    return Json{{"report", *contract_edge(g, params.at("edge").get<EdgeId>(), &need_f()).report}};
  }
  if (kind == "reduce" || kind == "reduce-search") {
    const SetLabeling& labels = need_f();
    const std::string v = params.at("vertex").get<std::string>();
    const auto iv = g.index_of(v);
    const std::string& u = g.name(g.adjacency(iv)[0]);
    const std::string& w = g.name(g.adjacency(iv)[1]);
    const bool uv_mono = mono(sumset(labels.at(u), labels.at(v)));
    const bool vw_mono = mono(sumset(labels.at(v), labels.at(w)));
    Json out{{"v_mono", mono(labels.at(v))}, {"uv_mono", uv_mono}, {"vw_mono", vw_mono}};
    const TransformResult r = topological_reduction(g, v, &labels);
    if (kind == "reduce") {
      out["report"] = *r.report;
    } else {
      out["search"] = search_observation(r.graph, SearchMode::weak, union_of(labels), std::nullopt,
                                         budget_of(params));
    }
    return out;
  }
  if (kind == "line" || kind == "total" || kind == "line-search" || kind == "total-search") {
    const bool line = kind == "line" || kind == "line-search";
    const TransformResult r = line ? line_graph(g, &need_f()) : total_graph(g, &need_f());
    Json out;
    if (kind == "line" || kind == "total") {
      out["report"] = *r.report;
    } else {
      const SearchMode mode = search_mode_from_string(params.at("mode").get<std::string>());
      out["search"] = search_observation(r.graph, mode, union_of(*r.induced_labeling), std::nullopt,
                                         budget_of(params));
    }
    if (params.contains("condition")) {
      out["condition"] = side_condition(params.at("condition").get<std::string>(), g, need_f());
    }
    return out;
  }
  if (kind == "search") {
    std::optional<std::size_t> uniform;
    if (params.contains("uniform")) uniform = params.at("uniform").get<std::size_t>();
    return Json{{"search", search_observation(
                               g, search_mode_from_string(params.at("mode").get<std::string>()),
                               parse_int_set(params.at("ground").get<std::string>()), uniform,
                               budget_of(params))}};
  }
  throw SpecError("unknown observation kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Check engine.

enum class State { skip, ok, violated, inconclusive };

struct Outcome {
  State state = State::skip;
  std::optional<Counterexample> cex;
};

struct Instance {
  std::size_t entry = 0;
  // Index into the entry's labelings, if any.
  std::optional<std::size_t> labeling;
  Json params;
};

struct Context {
  const Corpus& corpus;
  const HarnessOptions& options;
  // reports[entry][labeling]
  std::vector<std::vector<VerificationReport>> reports;

  const CorpusEntry& entry(const Instance& in) const { return corpus.entries[in.entry]; }
  const SetLabeling* labeling(const Instance& in) const {
    return in.labeling ? &corpus.entries[in.entry].labelings[*in.labeling].labeling : nullptr;
  }
  const VerificationReport& report(const Instance& in) const {
    return reports[in.entry][*in.labeling];
  }
};

Counterexample make_cex(const std::string& kind, const CorpusEntry& entry, const SetLabeling* f,
                        const Json& params, const Json& observation) {
  Counterexample c;
  c.kind = kind;
  c.graph_name = entry.name;
  c.graph = format_graph(entry.graph);
  c.labeling = f != nullptr ? format_labeling(*f, entry.graph) : std::string();
  c.params = params;
  c.observation = observation.dump();
  c.vertices = entry.graph.vertex_count();
  c.edges = entry.graph.edge_count();
  return c;
}

// Runs the observation and turns a predicate over it into an outcome.
Outcome judge(const Context& ctx, const Instance& in, const std::string& kind, const Json& params,
              const std::function<State(const Json&)>& verdict) {
  const Json obs = observe(kind, ctx.entry(in).graph, ctx.labeling(in), params);
  Outcome out;
  out.state = verdict(obs);
  if (out.state == State::violated) out.cex = make_cex(kind, ctx.entry(in), ctx.labeling(in), params, obs);
  return out;
}

State expect(bool ok) { return ok ? State::ok : State::violated; }

// "found" / "exhausted" / "timeout" / "skipped" -> admits? (nullopt when unknown)
std::optional<bool> search_admits(const Json& search) {
  const std::string status = search.at("status").get<std::string>();
  if (status == "found") return true;
  if (status == "exhausted") return false;
  return std::nullopt;
}

using Evaluator = std::function<std::vector<Outcome>(const Context&, const Instance&)>;

TheoremReport run_theorem(const Context& ctx, std::string id, std::string claim,
                          std::vector<std::string> check_names, const std::vector<Instance>& instances,
                          const Evaluator& eval) {
  std::vector<std::vector<Outcome>> results(instances.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(dynamic, 1) if (ctx.options.parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = eval(ctx, instances[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(iasi_harness_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  TheoremReport report;
  report.id = std::move(id);
  report.claim = std::move(claim);
  for (std::size_t c = 0; c < check_names.size(); ++c) {
    CheckResult check;
    check.name = check_names[c];
    for (const auto& outcomes : results) {
      const Outcome& o = outcomes.at(c);
      if (o.state == State::skip) continue;
      ++check.instances;
      if (o.state == State::inconclusive) ++check.inconclusive;
      if (o.state != State::violated) continue;
      ++check.violations;
      const auto& cand = *o.cex;
      if (!check.counterexample ||
          std::pair(cand.vertices, cand.edges) <
              std::pair(check.counterexample->vertices, check.counterexample->edges)) {
        check.counterexample = cand;
      }
    }
    check.verdict = check.violations > 0    ? Verdict::counterexample
                    : check.inconclusive > 0 ? Verdict::inconclusive
                                             : Verdict::holds;
    report.checks.push_back(std::move(check));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Instance builders.

std::vector<Instance> per_graph(const Context& ctx) {
  std::vector<Instance> out;
  for (std::size_t e = 0; e < ctx.corpus.entries.size(); ++e) out.push_back({e, std::nullopt, Json::object()});
  return out;
}

std::vector<Instance> per_labeling(const Context& ctx,
                                   const std::function<bool(const CorpusEntry&, const VerificationReport&)>& keep) {
  std::vector<Instance> out;
  for (std::size_t e = 0; e < ctx.corpus.entries.size(); ++e) {
    const auto& entry = ctx.corpus.entries[e];
    for (std::size_t l = 0; l < entry.labelings.size(); ++l) {
      if (keep(entry, ctx.reports[e][l])) out.push_back({e, l, Json::object()});
    }
  }
  return out;
}

bool reducible(const Graph& g, Graph::Index v) {
  return g.degree(v) == 2 && !g.has_edge(g.adjacency(v)[0], g.adjacency(v)[1]);
}

std::vector<Instance> per_reducible_vertex(const Context& ctx, bool weak_only) {
  std::vector<Instance> out;
  for (auto base : per_labeling(ctx, [&](const CorpusEntry&, const VerificationReport& r) {
         return !weak_only || r.is_weak_iasi();
       })) {
    const Graph& g = ctx.entry(base).graph;
    for (Graph::Index v = 0; v < g.vertex_count(); ++v) {
      if (!reducible(g, v)) continue;
      Instance in = base;
      in.params = Json{{"vertex", g.name(v)}};
      out.push_back(std::move(in));
    }
  }
  return out;
}

bool nondegenerate_strong(const VerificationReport& r) {
  return std::any_of(r.per_edge.begin(), r.per_edge.end(),
                     [](const EdgeReport& e) { return e.edge_class == EdgeClass::strong; });
}

// ---------------------------------------------------------------------------
// Theorems.

TheoremReport t1(const Context& ctx) {
  return run_theorem(ctx, "T1", "v_i -> {2^i} is an IASI of G",
                     {"canonical-labeling-is-iasi"}, per_graph(ctx),
                     [](const Context& c, const Instance& in) {
                       return std::vector<Outcome>{judge(c, in, "canonical", in.params, [](const Json& o) {
                         return expect(o.at("report").at("is_iasi").get<bool>());
                       })};
                     });
}

TheoremReport t2(const Context& ctx) {
  std::vector<Instance> instances;
  for (auto base : per_labeling(ctx, [](const CorpusEntry&, const VerificationReport&) { return true; })) {
    const Graph& g = ctx.entry(base).graph;
    for (const auto& e : g.edges()) {
      Instance in = base;
      in.params = Json{{"edge", e}};
      instances.push_back(std::move(in));
    }
    for (const auto& v : g.vertices()) {
      Instance in = base;
      in.params = Json{{"vertex", v}};
      instances.push_back(std::move(in));
    }
  }
  return run_theorem(ctx, "T2", "f IASI of G, H <= G => f|H IASI of H",
                     {"restriction-is-iasi"}, instances, [](const Context& c, const Instance& in) {
                       return std::vector<Outcome>{judge(c, in, "restrict", in.params, [](const Json& o) {
                         return expect(o.at("report").at("is_iasi").get<bool>());
                       })};
                     });
}

TheoremReport t3(const Context& ctx) {
  std::vector<Instance> instances;
  for (auto base : per_labeling(ctx, [](const CorpusEntry&, const VerificationReport&) { return true; })) {
    for (const auto& e : ctx.entry(base).graph.edges()) {
      Instance in = base;
      in.params = Json{{"edge", e}};
      instances.push_back(std::move(in));
    }
  }
  return run_theorem(
      ctx, "T3", "f IASI of G => G/uv with w -> f(u)+f(v) is IASI",
      {"induced-labeling-is-iasi", "contracted-graph-admits-iasi"}, instances,
      [](const Context& c, const Instance& in) {
        auto is_iasi = [](const Json& o) { return expect(o.at("report").at("is_iasi").get<bool>()); };
        Json admits = in.params;
        admits["of"] = "contract";
        return std::vector<Outcome>{judge(c, in, "contract", in.params, is_iasi),
                                    judge(c, in, "admits", admits, is_iasi)};
      });
}

TheoremReport t4(const Context& ctx) {
  return run_theorem(
      ctx, "T4", "f IASI of G, deg(v) = 2 => G reduced at v is IASI under f",
      {"induced-labeling-is-iasi", "reduced-graph-admits-iasi"}, per_reducible_vertex(ctx, false),
      [](const Context& c, const Instance& in) {
        auto is_iasi = [](const Json& o) { return expect(o.at("report").at("is_iasi").get<bool>()); };
        Json admits = in.params;
        admits["of"] = "reduce";
        return std::vector<Outcome>{judge(c, in, "reduce", in.params, is_iasi),
                                    judge(c, in, "admits", admits, is_iasi)};
      });
}

TheoremReport derived_graph_theorem(const Context& ctx, std::string id, std::string claim,
                                    const std::string& kind) {
  const auto instances = per_labeling(
      ctx, [](const CorpusEntry& e, const VerificationReport&) { return e.graph.edge_count() > 0; });
  return run_theorem(
      ctx, std::move(id), std::move(claim),
      {"induced-labeling-is-iasi", "induced-vertex-labels-injective", "derived-graph-admits-iasi"},
      instances, [kind](const Context& c, const Instance& in) {
        const Json obs = observe(kind, c.entry(in).graph, c.labeling(in), in.params);
        const Json& report = obs.at("report");
        std::vector<Outcome> out(3);
        auto fill = [&](Outcome& o, bool ok) {
          o.state = expect(ok);
          if (!ok) o.cex = make_cex(kind, c.entry(in), c.labeling(in), in.params, obs);
        };
        fill(out[0], report.at("is_iasi").get<bool>());
        fill(out[1], report.at("vertex_injective").get<bool>());
        out[2] = judge(c, in, "admits", Json{{"of", kind}}, [](const Json& o) {
          return expect(o.at("report").at("is_iasi").get<bool>());
        });
        return out;
      });
}

// Compares a condition against "admits" under the induced and search readings.
void biconditional(Outcome& induced_out, Outcome& search_out, bool condition, const Context& c,
                   const Instance& in, const std::string& induced_kind, const Json& induced_params,
                   const Json& induced_obs,
                   bool induced_admits, const std::string& search_kind, const Json& search_params,
                   const Json& search_obs, const Json& search_block) {
  induced_out.state = expect(condition == induced_admits);
  if (induced_out.state == State::violated) {
    induced_out.cex = make_cex(induced_kind, c.entry(in), c.labeling(in), induced_params, induced_obs);
  }
  const auto admits = search_admits(search_block);
  if (!admits) {
    search_out.state = State::inconclusive;
    return;
  }
  search_out.state = expect(condition == *admits);
  if (search_out.state == State::violated) {
    search_out.cex = make_cex(search_kind, c.entry(in), c.labeling(in), search_params, search_obs);
  }
}

TheoremReport t7(const Context& ctx) {
  return run_theorem(
      ctx, "T7",
      "f weak on G, deg(v) = 2, uw not an edge: reduced graph weak <=> "
      "|f(v)| > 1 or |g(uv)| = 1 or |g(vw)| = 1",
      {"literal/induced", "literal/search", "v-not-mono/induced", "v-not-mono/search", "edge-mono/induced",
       "edge-mono/search"},
      per_reducible_vertex(ctx, true), [](const Context& c, const Instance& in) {
        const Json induced = observe("reduce", c.entry(in).graph, c.labeling(in), in.params);
        Json sparams = in.params;
        sparams["node_budget"] = c.options.search_node_budget;
        const Json searched = observe("reduce-search", c.entry(in).graph, c.labeling(in), sparams);
        const bool v_mono = induced.at("v_mono").get<bool>();
        const bool edge_mono = induced.at("uv_mono").get<bool>() || induced.at("vw_mono").get<bool>();
        const auto& rep = induced.at("report");
        const bool induced_admits =
            rep.at("is_iasi").get<bool>() && (rep.at("graph_class") == "weak" || rep.at("graph_class") == "both");
        const std::array<bool, 3> conditions{!v_mono || edge_mono, !v_mono, edge_mono};
        std::vector<Outcome> out(6);
        for (std::size_t k = 0; k < conditions.size(); ++k) {
          biconditional(out[2 * k], out[2 * k + 1], conditions[k], c, in, "reduce", in.params, induced, induced_admits,
                        "reduce-search", sparams, searched, searched.at("search"));
        }
        return out;
      });
}

TheoremReport weak_derived_theorem(const Context& ctx, std::string id, std::string claim,
                                   const std::string& kind, bool line) {
  const auto instances = per_labeling(ctx, [](const CorpusEntry& e, const VerificationReport& r) {
    return e.graph.edge_count() > 0 && r.is_weak_iasi();
  });
  return run_theorem(
      ctx, std::move(id), std::move(claim), {"induced", "search"}, instances,
      [kind, line](const Context& c, const Instance& in) {
        const Graph& g = c.entry(in).graph;
        const Json iparams{{"condition", line ? "adjacent-edges-mono" : "one-uniform"}};
        const Json induced = observe(kind, g, c.labeling(in), iparams);
        const bool condition = induced.at("condition").get<bool>();
        const auto& rep = induced.at("report");
        const bool induced_admits =
            rep.at("is_iasi").get<bool>() && (rep.at("graph_class") == "weak" || rep.at("graph_class") == "both");
        Json sparams = iparams;
        sparams["mode"] = "weak";
        sparams["node_budget"] = c.options.search_node_budget;
        const std::string skind = kind + "-search";
        const Json searched = observe(skind, g, c.labeling(in), sparams);
        std::vector<Outcome> out(2);
        biconditional(out[0], out[1], condition, c, in, kind, iparams, induced, induced_admits, skind, sparams,
                      searched, searched.at("search"));
        return out;
      });
}

TheoremReport strong_derived_theorem(const Context& ctx, std::string id, std::string claim,
                                     const std::string& kind) {
  const auto instances = per_labeling(ctx, [](const CorpusEntry& e, const VerificationReport& r) {
    return r.is_strong_iasi() && !e.graph.adjacent_edge_index_pairs().empty();
  });
  return run_theorem(
      ctx, std::move(id), std::move(claim),
      {"induced", "search", "induced/non-degenerate", "search/non-degenerate"}, instances,
      [kind](const Context& c, const Instance& in) {
        const Graph& g = c.entry(in).graph;
        const Json induced = observe(kind, g, c.labeling(in), in.params);
        const auto& rep = induced.at("report");
        const bool induced_strong =
            rep.at("is_iasi").get<bool>() && (rep.at("graph_class") == "strong" || rep.at("graph_class") == "both");
        const Json sparams{{"mode", "strong"}, {"node_budget", c.options.search_node_budget}};
        const std::string skind = kind + "-search";
        const Json searched = observe(skind, g, c.labeling(in), sparams);

        std::vector<Outcome> out(4);
        out[0].state = expect(!induced_strong);
        if (induced_strong) out[0].cex = make_cex(kind, c.entry(in), c.labeling(in), in.params, induced);
        const auto admits = search_admits(searched.at("search"));
        if (!admits) {
          out[1].state = State::inconclusive;
        } else {
          out[1].state = expect(!*admits);
          if (*admits) out[1].cex = make_cex(skind, c.entry(in), c.labeling(in), sparams, searched);
        }
        if (nondegenerate_strong(c.report(in))) {
          out[2] = out[0];
          out[3] = out[1];
        }
        return out;
      });
}

TheoremReport t12(const Context& ctx) {
  std::vector<Instance> instances;
  for (std::size_t e = 0; e < ctx.corpus.entries.size(); ++e) {
    const std::size_t n = ctx.corpus.entries[e].graph.vertex_count();
    if (n > ctx.options.bound_check_max_n) continue;
    const std::size_t m = ground_set_lower_bound(n) - 1;
    if (m == 0) continue;
    instances.push_back({e, std::nullopt, Json{{"ground", IntSet::prefix(m).to_string()}}});
  }
  return run_theorem(
      ctx, "T12", "IASI on n vertices over X => |X| >= ceil(log2(n+1))",
      {"iasi-exhausted-below-bound", "weak-exhausted-below-bound", "strong-exhausted-below-bound"}, instances,
      [](const Context& c, const Instance& in) {
        std::vector<Outcome> out;
        for (const char* mode : {"iasi", "weak", "strong"}) {
          Json params = in.params;
          params["mode"] = mode;
          out.push_back(judge(c, in, "search", params, [](const Json& o) {
            return expect(o.at("search").at("status") == "exhausted");
          }));
        }
        return out;
      });
}

TheoremReport t13(const Context& ctx) {
  std::vector<Instance> instances;
  for (std::size_t e = 0; e < ctx.corpus.entries.size(); ++e) {
    const std::size_t n = ctx.corpus.entries[e].graph.vertex_count();
    if (n > ctx.options.bound_check_max_n) continue;
    for (std::size_t l = 1; l <= 3; ++l) {
      for (std::size_t m = l; m < uniform_ground_set_lower_bound(n, l); ++m) {
        instances.push_back(
            {e, std::nullopt, Json{{"mode", "iasi"}, {"ground", IntSet::prefix(m).to_string()}, {"uniform", l}}});
      }
    }
  }
  return run_theorem(ctx, "T13",
                     "l-uniform IASI on n vertices over X => C(|X|, l) >= n",
                     {"uniform-exhausted-below-binomial-bound"}, instances,
                     [](const Context& c, const Instance& in) {
                       return std::vector<Outcome>{judge(c, in, "search", in.params, [](const Json& o) {
                         return expect(o.at("search").at("status") == "exhausted");
                       })};
                     });
}

}  // namespace

SuiteReport run_suite(const Corpus& corpus, const HarnessOptions& options) {
  const auto& ids = theorem_ids();
  if (options.theorem && std::find(ids.begin(), ids.end(), *options.theorem) == ids.end()) {
    throw SpecError("unknown theorem '" + *options.theorem + "'");
  }
  Context ctx{corpus, options, {}};
  ctx.reports.resize(corpus.entries.size());
  SuiteReport suite;
  suite.options = options;
  suite.graphs = corpus.entries.size();
  for (std::size_t e = 0; e < corpus.entries.size(); ++e) {
    for (const auto& l : corpus.entries[e].labelings) {
      ctx.reports[e].push_back(verify(corpus.entries[e].graph, l.labeling));
      ++suite.labelings;
    }
  }

  using Runner = std::function<TheoremReport()>;
  const std::vector<std::pair<std::string, Runner>> runners{
      {"T1", [&] { return t1(ctx); }},
      {"T2", [&] { return t2(ctx); }},
      {"T3", [&] { return t3(ctx); }},
      {"T4", [&] { return t4(ctx); }},
      {"T5", [&] { return derived_graph_theorem(ctx, "T5", "f IASI of G => g_f IASI of L(G)", "line"); }},
      {"T6", [&] { return derived_graph_theorem(ctx, "T6", "f IASI of G => f + g_f IASI of T(G)", "total"); }},
      {"T7", [&] { return t7(ctx); }},
      {"T8", [&] { return weak_derived_theorem(ctx, "T8", "f weak on G: L(G) weak <=> each adjacent edge pair has |g(e)| = 1 for some e", "line", true); }},
      {"T9", [&] { return weak_derived_theorem(ctx, "T9", "f weak on G: T(G) weak <=> |f(v)| = 1 for all v", "total", false); }},
      {"T10", [&] { return strong_derived_theorem(ctx, "T10", "f strong on G => L(G) not strong", "line"); }},
      {"T11", [&] { return strong_derived_theorem(ctx, "T11", "f strong on G => T(G) not strong", "total"); }},
      {"T12", [&] { return t12(ctx); }},
      {"T13", [&] { return t13(ctx); }},
  };
  for (const auto& [id, run] : runners) {
    if (options.theorem && *options.theorem != id) continue;
    suite.theorems.push_back(run());
  }
  return suite;
}

SuiteReport run_harness(const HarnessOptions& options) {
  CorpusOptions co;
  co.n_max = options.max_n;
  co.family_cap = std::min(options.max_n + 1, kMaxCorpusVertices);
  co.seed = options.seed;
  co.parallel = options.parallel;
  return run_suite(generate_corpus(co), options);
}

std::string replay(const Counterexample& cex) {
  const Graph g = parse_graph(cex.graph);
  std::optional<SetLabeling> f;
  if (!cex.labeling.empty()) f = parse_labeling(cex.labeling);
  return observe(cex.kind, g, f ? &*f : nullptr, cex.params).dump();
}

Json counterexample_to_json(const Counterexample& c) {
  return Json{{"kind", c.kind},         {"graph_name", c.graph_name}, {"graph", c.graph},
              {"labeling", c.labeling}, {"params", c.params},         {"observation", c.observation},
              {"vertices", c.vertices}, {"edges", c.edges}};
}

Counterexample counterexample_from_json(const Json& j) {
  Counterexample c;
  c.kind = j.at("kind").get<std::string>();
  c.graph_name = j.at("graph_name").get<std::string>();
  c.graph = j.at("graph").get<std::string>();
  c.labeling = j.at("labeling").get<std::string>();
  c.params = j.at("params");
  c.observation = j.at("observation").get<std::string>();
  c.vertices = j.at("vertices").get<std::size_t>();
  c.edges = j.at("edges").get<std::size_t>();
  return c;
}

Json suite_to_json(const SuiteReport& report) {
  Json theorems = Json::array();
  for (const auto& t : report.theorems) {
    Json checks = Json::array();
    for (const auto& c : t.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"verdict", std::string(to_string(c.verdict))},
                            {"instances", c.instances},
                            {"violations", c.violations},
                            {"inconclusive", c.inconclusive},
                            {"counterexample", c.counterexample ? counterexample_to_json(*c.counterexample) : Json()}});
    }
    theorems.push_back(Json{{"id", t.id},
                            {"claim", t.claim},
                            {"verdict", std::string(to_string(t.verdict()))},
                            {"checks", std::move(checks)}});
  }
  return Json{{"max_n", report.options.max_n},
              {"seed", report.options.seed},
              {"search_node_budget", report.options.search_node_budget},
              {"graphs", report.graphs},
              {"labelings", report.labelings},
              {"theorems", std::move(theorems)}};
}

std::string format_suite(const SuiteReport& report) {
  std::ostringstream out;
  out << "max_n: " << report.options.max_n << '\n';
  out << "seed: " << report.options.seed << '\n';
  out << "graphs: " << report.graphs << '\n';
  out << "labelings: " << report.labelings << '\n';
  for (const auto& t : report.theorems) {
    out << '\n' << t.id << ": " << to_string(t.verdict()) << '\n';
    out << "  claim: " << t.claim << '\n';
    for (const auto& c : t.checks) {
      out << "  check " << c.name << ": " << to_string(c.verdict) << " (instances=" << c.instances
          << " violations=" << c.violations << " inconclusive=" << c.inconclusive << ")\n";
      if (c.counterexample) {
        const auto& x = *c.counterexample;
        out << "    counterexample: graph=" << x.graph_name << " kind=" << x.kind << " params=" << x.params.dump()
            << '\n';
        std::string labels = x.labeling;
        std::replace(labels.begin(), labels.end(), '\n', ' ');
        if (!labels.empty()) out << "    labeling: " << labels << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace iasi
