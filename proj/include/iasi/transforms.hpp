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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "iasi/graph.hpp"
#include "iasi/set_labeling.hpp"
#include "iasi/verify.hpp"

namespace iasi {

// Where a vertex of a derived graph came from.
struct Origin {
  enum class Kind { vertex, edge, merged };
  Kind kind = Kind::vertex;
  // vertex: the source vertex in `first`. edge / merged: the two endpoints,
  // canonically ordered.
  std::string first;
  std::string second;

  friend bool operator==(const Origin&, const Origin&) = default;
};

// Derived graph plus provenance. When a source labeling was supplied the
// induced labeling is attached together with its verification report; the
// report is recomputed, never assumed.
struct TransformResult {
  Graph graph;
  std::map<std::string, Origin> provenance;
  std::optional<SetLabeling> induced_labeling;
  std::optional<VerificationReport> report;
};

// Derived vertex names.
std::string edge_vertex_name(const EdgeId& e);    // e:<u>-<v>
std::string merged_vertex_name(const EdgeId& e);  // m:<u>+<v>

// L(G): one vertex per edge (edge order), adjacent iff the edges share an
// endpoint.
TransformResult line_graph(const Graph& g, const SetLabeling* f = nullptr);
// Each L(G) vertex gets g_f of its edge.
SetLabeling induce_line_labeling(const Graph& g, const SetLabeling& f);

// T(G): V(G) followed by one vertex per edge. Edges: those of G, then
// edge-edge adjacencies, then vertex-edge incidences.
TransformResult total_graph(const Graph& g, const SetLabeling* f = nullptr);
// f on vertex-origin vertices, g_f on edge-origin vertices.
SetLabeling induce_total_labeling(const Graph& g, const SetLabeling& f);

// G o e: endpoints merged into `m:<u>+<v>` at the position of the earlier
// endpoint; parallel edges coalesced, loops dropped. The merged vertex is
// labeled f(u)+f(v). Throws GraphError for an unknown edge.
TransformResult contract_edge(const Graph& g, const EdgeId& e, const SetLabeling* f = nullptr);

// Removes a degree-2 vertex v and joins its two neighbours u, w. The
// labeling is f restricted to the remaining vertices, so the new edge uw
// carries f(u)+f(w). Throws GraphError if deg(v) != 2 or u, w are adjacent.
TransformResult topological_reduction(const Graph& g, std::string_view v,
                                      const SetLabeling* f = nullptr);

// Provenance sidecar: `<new>: vertex <v>`, `<new>: edge <u> <v>` or
// `<new>: merged <u> <v>`, in the derived graph's vertex order.
std::string format_provenance(const TransformResult& result);

}  // namespace iasi
