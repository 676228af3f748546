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

#include "iasi/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "iasi/error.hpp"

namespace iasi {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || name == "vertex") return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '{' || c == '}';
  });
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

EdgeId EdgeId::make(std::string_view u, std::string_view v) {
  if (v < u) std::swap(u, v);
  return EdgeId{std::string(u), std::string(v)};
}

Graph::Index Graph::add_vertex(std::string name) {
  if (!valid_name(name)) throw GraphError("invalid vertex name '" + name + "'");
  if (index_.contains(name)) throw GraphError("duplicate vertex '" + name + "'");
  const Index idx = names_.size();
  index_.emplace(name, idx);
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return idx;
}

Graph::Index Graph::ensure_vertex(std::string_view name) {
  if (auto idx = find(name)) return *idx;
  return add_vertex(std::string(name));
}

void Graph::add_edge(std::string_view u, std::string_view v) {
  add_edge(index_of(u), index_of(v));
}

void Graph::add_edge(Index u, Index v) {
  if (u >= names_.size() || v >= names_.size()) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loop at vertex '" + names_[u] + "'");
  if (edge_index_.contains(key(u, v))) {
    throw GraphError("duplicate edge " + EdgeId::make(names_[u], names_[v]).to_string());
  }
  if (u > v) std::swap(u, v);
  edge_index_.emplace(key(u, v), edges_.size());
  edges_.emplace_back(u, v);
  auto insert_sorted = [](std::vector<Index>& adj, Index x) {
    adj.insert(std::upper_bound(adj.begin(), adj.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

std::optional<Graph::Index> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph::Index Graph::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

bool Graph::has_edge(Index u, Index v) const { return edge_index_.contains(key(u, v)); }

bool Graph::has_edge(std::string_view u, std::string_view v) const {
  auto iu = find(u);
  auto iv = find(v);
  return iu && iv && has_edge(*iu, *iv);
}

std::optional<std::size_t> Graph::find_edge(Index u, Index v) const {
  auto it = edge_index_.find(key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeId Graph::edge_id(std::size_t edge) const {
  const auto& [u, v] = edges_.at(edge);
  return EdgeId::make(names_[u], names_[v]);
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out.push_back(edge_id(i));
  return out;
}

std::vector<std::string> Graph::neighbors(std::string_view v) const {
  std::vector<std::string> out;
  for (Index w : adjacency_.at(index_of(v))) out.push_back(names_[w]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::adjacent_edge_index_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [a, b] = edges_[i];
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const auto [c, d] = edges_[j];
      if (a == c || a == d || b == c || b == d) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<EdgeId, EdgeId>> Graph::adjacent_edge_pairs() const {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (const auto& [i, j] : adjacent_edge_index_pairs()) out.emplace_back(edge_id(i), edge_id(j));
  return out;
}

std::vector<std::string> Graph::isolated_vertices() const {
  std::vector<std::string> out;
  for (Index v = 0; v < names_.size(); ++v) {
    if (adjacency_[v].empty()) out.push_back(names_[v]);
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError("expected '<u> <v>' or 'vertex <u>', got " +
                           std::to_string(tokens.size()) + " token(s)",
                       line_no);
    }
    try {
      if (tokens[0] == "vertex") {
        g.ensure_vertex(tokens[1]);
        continue;
      }
      if (tokens[0] == tokens[1]) throw ParseError("loop at vertex '" + std::string(tokens[0]) + "'", line_no);
      const auto u = g.ensure_vertex(tokens[0]);
      const auto v = g.ensure_vertex(tokens[1]);
      if (g.has_edge(u, v)) {
        throw ParseError("duplicate edge " + EdgeId::make(tokens[0], tokens[1]).to_string(),
                         line_no);
      }
      g.add_edge(u, v);
    } catch (const ParseError&) {
      throw;
    } catch (const GraphError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& name : g.vertices()) out << "vertex " << name << '\n';
  for (const auto& [u, v] : g.edge_list()) out << g.name(u) << ' ' << g.name(v) << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g, const SetLabeling* labels) {
  if (labels != nullptr) {
    if (labels->size() != g.vertex_count()) {
      throw GraphError("labeling has " + std::to_string(labels->size()) + " entries for " +
                       std::to_string(g.vertex_count()) + " vertices");
    }
    for (const auto& name : g.vertices()) {
      if (!labels->contains(name)) throw GraphError("vertex '" + name + "' has no label");
    }
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& name : g.vertices()) {
    out << "  " << dot_quote(name);
    if (labels != nullptr) out << " [label=" << dot_quote(name + ": " + labels->at(name).to_string()) << "]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edge_list()) {
    out << "  " << dot_quote(g.name(u)) << " -- " << dot_quote(g.name(v));
    if (labels != nullptr) {
      const IntSet sum = sumset(labels->at(g.name(u)), labels->at(g.name(v)));
      out << " [label=" << dot_quote(sum.to_string()) << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Graph without_edge(const Graph& g, const EdgeId& e) {
  if (!g.has_edge(e)) throw GraphError("unknown edge " + e.to_string());
  Graph h;
  for (const auto& name : g.vertices()) h.add_vertex(name);
  const auto skip = *g.find_edge(g.index_of(e.first), g.index_of(e.second));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != skip) h.add_edge(g.edge_list()[i].first, g.edge_list()[i].second);
  }
  return h;
}

Graph without_vertex(const Graph& g, std::string_view v) {
  const auto drop = g.index_of(v);
  Graph h;
  for (Graph::Index i = 0; i < g.vertex_count(); ++i) {
    if (i != drop) h.add_vertex(g.name(i));
  }
  for (const auto& [a, b] : g.edge_list()) {
    if (a != drop && b != drop) h.add_edge(g.name(a), g.name(b));
  }
  return h;
}

bool is_subgraph(const Graph& h, const Graph& g) {
  for (const auto& name : h.vertices()) {
    if (!g.has_vertex(name)) return false;
  }
  for (const auto& [a, b] : h.edge_list()) {
    if (!g.has_edge(h.name(a), h.name(b))) return false;
  }
  return true;
}

}  // namespace iasi
