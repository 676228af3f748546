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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iasi/set_labeling.hpp"

namespace iasi {

// Unordered edge, canonicalised so that first < second lexicographically.
struct EdgeId {
  std::string first;
  std::string second;

  static EdgeId make(std::string_view u, std::string_view v);

  // `u-v`, for human-readable output only.
  std::string to_string() const { return first + "-" + second; }

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Finite simple undirected graph over named vertices. Vertex order is
// insertion order; edges keep insertion order as well.
class Graph {
 public:
  using Index = std::size_t;
  // Endpoint indices with first < second.
  using IndexEdge = std::pair<Index, Index>;

  Graph() = default;

  // Throws GraphError for a duplicate or invalid name. Valid names are
  // non-empty, contain no whitespace and none of `#{}`, and are not the
  // reserved word `vertex`.
  Index add_vertex(std::string name);
  // Returns the existing index when the vertex is already present.
  Index ensure_vertex(std::string_view name);

  // Throws GraphError on unknown endpoint, loop, or duplicate edge.
  void add_edge(std::string_view u, std::string_view v);
  void add_edge(Index u, Index v);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(Index v) const { return names_.at(v); }
  std::optional<Index> find(std::string_view name) const;
  // Throws GraphError for an unknown vertex.
  Index index_of(std::string_view name) const;
  bool has_vertex(std::string_view name) const { return find(name).has_value(); }

  bool has_edge(Index u, Index v) const;
  bool has_edge(std::string_view u, std::string_view v) const;
  bool has_edge(const EdgeId& e) const { return has_edge(e.first, e.second); }
  std::optional<std::size_t> find_edge(Index u, Index v) const;

  const std::vector<IndexEdge>& edge_list() const { return edges_; }
  EdgeId edge_id(std::size_t edge) const;
  std::vector<EdgeId> edges() const;

  std::size_t degree(Index v) const { return adjacency_.at(v).size(); }
  std::size_t degree(std::string_view v) const { return degree(index_of(v)); }
  // Neighbour indices, ascending.
  const std::vector<Index>& adjacency(Index v) const { return adjacency_.at(v); }
  // Neighbour names in vertex order.
  std::vector<std::string> neighbors(std::string_view v) const;

  // Each unordered pair of distinct edges sharing an endpoint, once, as
  // (i, j) edge positions with i < j in edge order.
  std::vector<std::pair<std::size_t, std::size_t>> adjacent_edge_index_pairs() const;
  std::vector<std::pair<EdgeId, EdgeId>> adjacent_edge_pairs() const;

  std::vector<std::string> isolated_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Index u, Index v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> index_;
  std::vector<IndexEdge> edges_;
  std::vector<std::vector<Index>> adjacency_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

// Edge-list document: one `<u> <v>` per line, `vertex <u>` declares a vertex,
// `#` starts a comment. Vertices appear in first-mention order. Errors carry
// the 1-based line number.
Graph parse_graph(std::string_view text);

// Inverse of parse_graph: every vertex declared first (preserving order),
// then the edges.
std::string format_graph(const Graph& g);

// Graphviz `graph` document. With labels, vertices are annotated `v: {..}`
// and edges with their sumset; throws GraphError if the labeling does not
// cover the graph exactly.
std::string emit_dot(const Graph& g, const SetLabeling* labels = nullptr);

// Subgraph helpers.
Graph without_edge(const Graph& g, const EdgeId& e);
Graph without_vertex(const Graph& g, std::string_view v);
bool is_subgraph(const Graph& h, const Graph& g);

}  // namespace iasi
