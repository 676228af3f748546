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
#include <cstdint>
#include <string>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/set_labeling.hpp"

namespace iasi {

inline constexpr std::size_t kMaxCorpusVertices = 6;

// One graph per isomorphism class on exactly n vertices, built by adding a
// vertex to each graph on n-1 vertices and keeping one representative per
// canonical form. Vertices are named a, b, c, ... in canonical order. The
// list is sorted by edge count, then canonical code. n <= 7.
std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only);

// Canonical code: the minimum over all vertex permutations of the
// upper-triangle adjacency bit string. Equal codes iff isomorphic. n <= 7.
std::uint64_t canonical_code(const Graph& g);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);  // K_{1,n-1}
Graph complete_graph(std::size_t n);

struct CorpusOptions {
  std::size_t n_max = 5;
  // Named families (paths, cycles, stars, complete graphs) are added for
  // every size in (n_max, family_cap]; smaller members are already present.
  // The default adds none.
  std::size_t family_cap = 0;
  std::uint64_t seed = 1;
  // Random labelings drawn per graph; only IASIs are kept.
  std::size_t random_labelings = 6;
  // Largest element of the random labels.
  std::uint64_t random_ground_max = 9;
  // Graphs up to this many vertices also receive search-found labelings.
  std::size_t search_max_vertices = 5;
  std::uint64_t search_node_budget = 200000;
  bool parallel = true;
};

struct CorpusLabeling {
  // "canonical", "search:<mode>[:uniform=<l>]" or "random:<k>".
  std::string source;
  SetLabeling labeling;
};

struct CorpusEntry {
  std::string name;
  Graph graph;
  // Every entry is an IASI of `graph`; no two are equal.
  std::vector<CorpusLabeling> labelings;
};

struct Corpus {
  CorpusOptions options;
  std::vector<CorpusEntry> entries;
};

// Connected graphs on 2..n_max vertices plus named families. The graph list
// does not depend on the seed; the seed only drives random labelings.
// Throws SpecError for n_max > kMaxCorpusVertices or n_max < 2.
Corpus generate_corpus(const CorpusOptions& options);

}  // namespace iasi
