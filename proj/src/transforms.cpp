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

#include "iasi/transforms.hpp"

#include <algorithm>
#include <sstream>

#include "iasi/error.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

namespace {

void attach(TransformResult& result, SetLabeling labeling) {
  result.report = verify(result.graph, labeling);
  result.induced_labeling = std::move(labeling);
}

}  // namespace

std::string edge_vertex_name(const EdgeId& e) { return "e:" + e.first + "-" + e.second; }

std::string merged_vertex_name(const EdgeId& e) { return "m:" + e.first + "+" + e.second; }

TransformResult line_graph(const Graph& g, const SetLabeling* f) {
  TransformResult result;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeId e = g.edge_id(i);
    const std::string name = edge_vertex_name(e);
    result.graph.add_vertex(name);
    result.provenance.emplace(name, Origin{Origin::Kind::edge, e.first, e.second});
  }
  // vertex i of L(G) is edge i of G
  for (const auto& [i, j] : g.adjacent_edge_index_pairs()) result.graph.add_edge(i, j);
  if (f != nullptr) attach(result, induce_line_labeling(g, *f));
  return result;
}

SetLabeling induce_line_labeling(const Graph& g, const SetLabeling& f) {
  SetLabeling out;
  for (const auto& [edge, label] : induced_edge_labels(g, f)) {
    out.assign(edge_vertex_name(edge), label);
  }
  return out;
}

TransformResult total_graph(const Graph& g, const SetLabeling* f) {
  TransformResult result;
  Graph& t = result.graph;
  for (const auto& name : g.vertices()) {
    t.add_vertex(name);
    result.provenance.emplace(name, Origin{Origin::Kind::vertex, name, {}});
  }
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const EdgeId e = g.edge_id(i);
    const std::string name = edge_vertex_name(e);
    t.add_vertex(name);
    result.provenance.emplace(name, Origin{Origin::Kind::edge, e.first, e.second});
  }
  for (const auto& [u, v] : g.edge_list()) t.add_edge(u, v);
  for (const auto& [i, j] : g.adjacent_edge_index_pairs()) t.add_edge(n + i, n + j);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edge_list()[i];
    t.add_edge(u, n + i);
    t.add_edge(v, n + i);
  }
  if (f != nullptr) attach(result, induce_total_labeling(g, *f));
  return result;
}

SetLabeling induce_total_labeling(const Graph& g, const SetLabeling& f) {
  SetLabeling out;
  for (const auto& [edge, label] : induced_edge_labels(g, f)) {
    out.assign(edge_vertex_name(edge), label);
  }
  for (const auto& name : g.vertices()) out.assign(name, f.at(name));
  return out;
}

TransformResult contract_edge(const Graph& g, const EdgeId& e, const SetLabeling* f) {
  if (!g.has_edge(e)) throw GraphError("unknown edge " + e.to_string());
  if (f != nullptr) require_coverage(g, *f);
  const auto iu = g.index_of(e.first);
  const auto iv = g.index_of(e.second);
  const auto keep = std::min(iu, iv);
  const auto drop = std::max(iu, iv);
  const std::string merged = merged_vertex_name(e);

  TransformResult result;
  Graph& h = result.graph;
  std::vector<Graph::Index> image(g.vertex_count());
  for (Graph::Index i = 0; i < g.vertex_count(); ++i) {
    if (i == drop) continue;
    if (i == keep) {
      image[i] = h.add_vertex(merged);
      result.provenance.emplace(merged, Origin{Origin::Kind::merged, e.first, e.second});
    } else {
      image[i] = h.add_vertex(g.name(i));
      result.provenance.emplace(g.name(i), Origin{Origin::Kind::vertex, g.name(i), {}});
    }
  }
  image[drop] = image[keep];
  for (const auto& [a, b] : g.edge_list()) {
    const auto x = image[a];
    const auto y = image[b];
    if (x == y || h.has_edge(x, y)) continue;
    h.add_edge(x, y);
  }
  if (f != nullptr) {
    SetLabeling induced;
    for (Graph::Index i = 0; i < g.vertex_count(); ++i) {
      if (i != keep && i != drop) induced.assign(g.name(i), f->at(g.name(i)));
    }
    induced.assign(merged, sumset(f->at(e.first), f->at(e.second)));
    attach(result, std::move(induced));
  }
  return result;
}

TransformResult topological_reduction(const Graph& g, std::string_view v, const SetLabeling* f) {
  const auto iv = g.index_of(v);
  if (g.degree(iv) != 2) {
    throw GraphError("vertex '" + std::string(v) + "' has degree " + std::to_string(g.degree(iv)) +
                     ", reduction needs degree 2");
  }
  const auto u = g.adjacency(iv)[0];
  const auto w = g.adjacency(iv)[1];
  if (g.has_edge(u, w)) {
    throw GraphError("neighbours of '" + std::string(v) + "' are already adjacent");
  }
  if (f != nullptr) require_coverage(g, *f);

  TransformResult result;
  result.graph = without_vertex(g, v);
  result.graph.add_edge(g.name(u), g.name(w));
  for (const auto& name : result.graph.vertices()) {
    result.provenance.emplace(name, Origin{Origin::Kind::vertex, name, {}});
  }
  if (f != nullptr) {
    SetLabeling induced;
    for (const auto& name : result.graph.vertices()) induced.assign(name, f->at(name));
    attach(result, std::move(induced));
  }
  return result;
}

std::string format_provenance(const TransformResult& result) {
  std::ostringstream out;
  for (const auto& name : result.graph.vertices()) {
    const Origin& o = result.provenance.at(name);
    out << name << ": ";
    switch (o.kind) {
      case Origin::Kind::vertex: out << "vertex " << o.first; break;
      case Origin::Kind::edge: out << "edge " << o.first << ' ' << o.second; break;
      case Origin::Kind::merged: out << "merged " << o.first << ' ' << o.second; break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace iasi
