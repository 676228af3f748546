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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/int_set.hpp"
#include "iasi/set_labeling.hpp"

namespace iasi {

// Cardinality pattern of an edge label relative to its endpoint labels.
//   weak:   |A+B| = max(|A|,|B|)
//   strong: |A+B| = |A||B|
//   both:   both equalities, which happens exactly when one endpoint label
//           is a singleton.
enum class EdgeClass { weak, strong, both, neither };

std::string_view to_string(EdgeClass c);
// Throws ParseError for an unknown name.
EdgeClass edge_class_from_string(std::string_view s);

struct EdgeReport {
  EdgeId edge;
  IntSet label;
  std::size_t indexing_number = 0;
  EdgeClass edge_class = EdgeClass::neither;

  friend bool operator==(const EdgeReport&, const EdgeReport&) = default;
};

// Certificate produced by verify(). Witnesses are the lexicographically first
// clashing pair and are present exactly when the matching verdict is false.
struct VerificationReport {
  bool vertex_injective = true;
  std::optional<std::pair<std::string, std::string>> vertex_witness;
  bool edge_injective = true;
  std::optional<std::pair<EdgeId, EdgeId>> edge_witness;
  bool is_iasi = true;
  // Sorted by edge.
  std::vector<EdgeReport> per_edge;
  // weak: every edge weak or both; strong: every edge strong or both;
  // both: both hold (always the case for an edgeless graph).
  EdgeClass graph_class = EdgeClass::both;
  // Common edge set-indexing number, when there is at least one edge and all
  // edges agree.
  std::optional<std::size_t> uniformity;
  // Vertex order of the graph.
  std::vector<std::string> mono_indexed_vertices;
  // Sorted by edge.
  std::vector<EdgeId> mono_indexed_edges;
  // Informational; injectivity still applies to these vertices.
  std::vector<std::string> isolated_vertices;

  bool is_weak_iasi() const {
    return is_iasi && (graph_class == EdgeClass::weak || graph_class == EdgeClass::both);
  }
  bool is_strong_iasi() const {
    return is_iasi && (graph_class == EdgeClass::strong || graph_class == EdgeClass::both);
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

EdgeClass classify_edge(const IntSet& a, const IntSet& b, std::size_t sumset_size);

// Throws GraphError when f does not cover g exactly; BoundExceeded on
// universe overflow. A labeling that is not an IASI is a normal result.
VerificationReport verify(const Graph& g, const SetLabeling& f);

bool is_k_uniform(const VerificationReport& report, std::size_t k);
// Every vertex label has exactly l elements.
bool is_l_uniformly_set_indexed(const Graph& g, const SetLabeling& f, std::size_t l);

struct MonoIndexed {
  std::vector<std::string> vertices;
  std::vector<EdgeId> edges;
};
MonoIndexed mono_indexed_elements(const VerificationReport& report);

// `key: value` lines in a fixed order, followed by one `edge` line per edge.
std::string format_report(const VerificationReport& report);

}  // namespace iasi
