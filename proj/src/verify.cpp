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

#include "iasi/verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "iasi/error.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::weak: return "weak";
    case EdgeClass::strong: return "strong";
    case EdgeClass::both: return "both";
    case EdgeClass::neither: return "neither";
  }
  return "neither";
}

EdgeClass edge_class_from_string(std::string_view s) {
  if (s == "weak") return EdgeClass::weak;
  if (s == "strong") return EdgeClass::strong;
  if (s == "both") return EdgeClass::both;
  if (s == "neither") return EdgeClass::neither;
  throw ParseError("unknown class '" + std::string(s) + "'", 0);
}

EdgeClass classify_edge(const IntSet& a, const IntSet& b, std::size_t sumset_size) {
  const bool weak = sumset_size == std::max(a.size(), b.size());
  const bool strong = sumset_size == a.size() * b.size();
  if (weak && strong) return EdgeClass::both;
  if (weak) return EdgeClass::weak;
  if (strong) return EdgeClass::strong;
  return EdgeClass::neither;
}

namespace {

// Lexicographically first (x, y), x < y, among keys sharing a value.
template <class Key, class Value>
std::optional<std::pair<Key, Key>> first_clash(const std::vector<std::pair<Key, Value>>& items) {
  std::unordered_map<Value, std::vector<Key>> groups;
  for (const auto& [k, v] : items) groups[v].push_back(k);
  std::optional<std::pair<Key, Key>> best;
  for (auto& [v, keys] : groups) {
    if (keys.size() < 2) continue;
    std::partial_sort(keys.begin(), keys.begin() + 2, keys.end());
    std::pair<Key, Key> cand{keys[0], keys[1]};
    if (!best || cand < *best) best = std::move(cand);
  }
  return best;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += items[i];
  }
  return out;
}

}  // namespace

VerificationReport verify(const Graph& g, const SetLabeling& f) {
  require_coverage(g, f);
  VerificationReport r;

  std::vector<std::pair<std::string, IntSet>> vertex_items;
  vertex_items.reserve(g.vertex_count());
  for (const auto& name : g.vertices()) {
    vertex_items.emplace_back(name, f.at(name));
    if (f.at(name).is_singleton()) r.mono_indexed_vertices.push_back(name);
  }
  r.vertex_witness = first_clash(vertex_items);
  r.vertex_injective = !r.vertex_witness.has_value();

  std::vector<std::pair<EdgeId, IntSet>> edge_items;
  edge_items.reserve(g.edge_count());
  for (const auto& [u, v] : g.edge_list()) {
    const IntSet& a = f.at(g.name(u));
    const IntSet& b = f.at(g.name(v));
    EdgeReport er;
    er.edge = EdgeId::make(g.name(u), g.name(v));
    er.label = sumset(a, b);
    er.indexing_number = er.label.size();
    er.edge_class = classify_edge(a, b, er.indexing_number);
    edge_items.emplace_back(er.edge, er.label);
    r.per_edge.push_back(std::move(er));
  }
  std::sort(r.per_edge.begin(), r.per_edge.end(),
            [](const EdgeReport& x, const EdgeReport& y) { return x.edge < y.edge; });
  r.edge_witness = first_clash(edge_items);
  r.edge_injective = !r.edge_witness.has_value();
  r.is_iasi = r.vertex_injective && r.edge_injective;

  bool all_weak = true;
  bool all_strong = true;
  for (const auto& er : r.per_edge) {
    all_weak = all_weak && (er.edge_class == EdgeClass::weak || er.edge_class == EdgeClass::both);
    all_strong =
        all_strong && (er.edge_class == EdgeClass::strong || er.edge_class == EdgeClass::both);
    if (er.indexing_number == 1) r.mono_indexed_edges.push_back(er.edge);
  }
  r.graph_class = all_weak && all_strong ? EdgeClass::both
                  : all_weak             ? EdgeClass::weak
                  : all_strong           ? EdgeClass::strong
                                         : EdgeClass::neither;

  if (!r.per_edge.empty()) {
    const std::size_t k = r.per_edge.front().indexing_number;
    if (is_k_uniform(r, k)) r.uniformity = k;
  }
  r.isolated_vertices = g.isolated_vertices();
  return r;
}

bool is_k_uniform(const VerificationReport& report, std::size_t k) {
  return std::all_of(report.per_edge.begin(), report.per_edge.end(),
                     [k](const EdgeReport& er) { return er.indexing_number == k; });
}

bool is_l_uniformly_set_indexed(const Graph& g, const SetLabeling& f, std::size_t l) {
  require_coverage(g, f);
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [&](const std::string& v) { return f.at(v).size() == l; });
}

MonoIndexed mono_indexed_elements(const VerificationReport& report) {
  return {report.mono_indexed_vertices, report.mono_indexed_edges};
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  out << "is_iasi: " << yes_no(r.is_iasi) << '\n';
  out << "vertex_injective: " << yes_no(r.vertex_injective) << '\n';
  out << "vertex_witness: "
      << (r.vertex_witness ? r.vertex_witness->first + "," + r.vertex_witness->second : "-") << '\n';
  out << "edge_injective: " << yes_no(r.edge_injective) << '\n';
  out << "edge_witness: "
      << (r.edge_witness
              ? r.edge_witness->first.to_string() + "," + r.edge_witness->second.to_string()
              : "-")
      << '\n';
  out << "graph_class: " << to_string(r.graph_class) << '\n';
  out << "uniformity: " << (r.uniformity ? std::to_string(*r.uniformity) : "-") << '\n';
  out << "mono_indexed_vertices: " << join(r.mono_indexed_vertices) << '\n';
  std::vector<std::string> mono_edges;
  for (const auto& e : r.mono_indexed_edges) mono_edges.push_back(e.to_string());
  out << "mono_indexed_edges: " << join(mono_edges) << '\n';
  out << "isolated_vertices: " << join(r.isolated_vertices) << '\n';
  for (const auto& er : r.per_edge) {
    out << "edge " << er.edge.to_string() << ": label=" << er.label.to_string()
        << " size=" << er.indexing_number << " class=" << to_string(er.edge_class) << '\n';
  }
  return out.str();
}

}  // namespace iasi
