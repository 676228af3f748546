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

#include "iasi/corpus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "iasi/error.hpp"
#include "iasi/labeling.hpp"
#include "iasi/search.hpp"
#include "iasi/verify.hpp"

namespace iasi {

namespace {

constexpr std::size_t kMaxEnumerate = 7;

// Adjacency as one bitmask per vertex.
using Masks = std::array<std::uint8_t, kMaxEnumerate>;

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // position of (i, j), i < j, in row-major upper-triangle order
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::uint64_t code_of(const Masks& adj, std::size_t n) {
  std::array<std::size_t, kMaxEnumerate> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if ((adj[perm[i]] >> perm[j]) & 1U) code |= std::uint64_t{1} << pair_index(i, j, n);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  return best;
}

Masks masks_from_code(std::uint64_t code, std::size_t n) {
  Masks adj{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((code >> pair_index(i, j, n)) & 1U) {
        adj[i] |= static_cast<std::uint8_t>(1U << j);
        adj[j] |= static_cast<std::uint8_t>(1U << i);
      }
    }
  }
  return adj;
}

std::string letter(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

Graph graph_from_code(std::uint64_t code, std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(letter(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((code >> pair_index(i, j, n)) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<std::uint64_t> codes_on(std::size_t n, bool connected_only) {
  if (n == 1) return {0};
  std::set<std::uint64_t> seen;
  for (std::uint64_t base : codes_on(n - 1, connected_only)) {
    const Masks prev = masks_from_code(base, n - 1);
    const unsigned subsets = 1U << (n - 1);
    for (unsigned s = connected_only ? 1U : 0U; s < subsets; ++s) {
      Masks adj = prev;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if ((s >> i) & 1U) {
          adj[i] |= static_cast<std::uint8_t>(1U << (n - 1));
          adj[n - 1] |= static_cast<std::uint8_t>(1U << i);
        }
      }
      seen.insert(code_of(adj, n));
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return out;
}

// splitmix64
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

void add_unique(CorpusEntry& entry, std::string source, SetLabeling f) {
  for (const auto& existing : entry.labelings) {
    if (existing.labeling == f) return;
  }
  entry.labelings.push_back({std::move(source), std::move(f)});
}

void label_entry(CorpusEntry& entry, std::size_t index, const CorpusOptions& options) {
  const Graph& g = entry.graph;
  add_unique(entry, "canonical", canonical_iasi(g));

  if (g.vertex_count() <= options.search_max_vertices) {
    struct Plan {
      SearchMode mode;
      std::optional<std::size_t> uniform;
    };
    const std::array<Plan, 5> plans{{{SearchMode::iasi, std::nullopt},
                                     {SearchMode::weak, std::nullopt},
                                     {SearchMode::strong, std::nullopt},
                                     {SearchMode::iasi, 2},
                                     {SearchMode::strong, 2}}};
    for (const auto& plan : plans) {
      MinimalGroundOptions mo;
      mo.mode = plan.mode;
      mo.uniform_vertex_size = plan.uniform;
      mo.max_ground = 8;
      mo.node_budget = options.search_node_budget;
      const auto result = minimal_ground_set(g, mo);
      if (result.status != SearchStatus::found) continue;
      std::string source = "search:" + std::string(to_string(plan.mode));
      if (plan.uniform) source += ":uniform=" + std::to_string(*plan.uniform);
      add_unique(entry, std::move(source), *result.outcome.labeling);
    }
  }

  Rng rng(options.seed * 0x100000001B3ULL + index);
  static constexpr std::array<std::size_t, 4> kSizes{1, 1, 2, 3};
  for (std::size_t k = 0; k < options.random_labelings; ++k) {
    SetLabeling f;
    for (const auto& name : g.vertices()) {
      const std::size_t size = kSizes[rng.below(kSizes.size())];
      IntSet label;
      while (label.size() < size) label.insert(rng.below(options.random_ground_max + 1));
      f.assign(name, std::move(label));
    }
    if (verify(g, f).is_iasi) add_unique(entry, "random:" + std::to_string(k), std::move(f));
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxEnumerate) throw SpecError("canonical code supports at most 7 vertices");
  Masks adj{};
  for (const auto& [u, v] : g.edge_list()) {
    adj[u] |= static_cast<std::uint8_t>(1U << v);
    adj[v] |= static_cast<std::uint8_t>(1U << u);
  }
  return code_of(adj, n);
}

std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
  if (n == 0 || n > kMaxEnumerate) throw SpecError("graph enumeration supports 1..7 vertices");
  std::vector<Graph> out;
  for (std::uint64_t code : codes_on(n, connected_only)) out.push_back(graph_from_code(code, n));
  return out;
}

Graph path_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(letter(i));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw SpecError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(letter(i));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(letter(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Corpus generate_corpus(const CorpusOptions& options) {
  if (options.n_max < 2 || options.n_max > kMaxCorpusVertices) {
    throw SpecError("corpus n_max must be in [2, " + std::to_string(kMaxCorpusVertices) + "]");
  }
  if (options.family_cap > kMaxCorpusVertices) {
    throw SpecError("family cap must be at most " + std::to_string(kMaxCorpusVertices));
  }
  Corpus corpus;
  corpus.options = options;

  auto family_name = [](const Graph& g) -> std::string {
    const std::size_t n = g.vertex_count();
    const std::uint64_t code = canonical_code(g);
    if (code == canonical_code(complete_graph(n))) return "K" + std::to_string(n);
    if (code == canonical_code(path_graph(n))) return "P" + std::to_string(n);
    if (n >= 3 && code == canonical_code(cycle_graph(n))) return "C" + std::to_string(n);
    if (code == canonical_code(star_graph(n))) return "S" + std::to_string(n);
    return {};
  };

  for (std::size_t n = 2; n <= options.n_max; ++n) {
    std::size_t i = 0;
    for (Graph& g : enumerate_graphs(n, true)) {
      std::string name = family_name(g);
      if (name.empty()) name = "G" + std::to_string(n) + "." + std::to_string(i);
      corpus.entries.push_back({std::move(name), std::move(g), {}});
      ++i;
    }
  }
  for (std::size_t n = options.n_max + 1; n <= options.family_cap; ++n) {
    corpus.entries.push_back({"P" + std::to_string(n), path_graph(n), {}});
    corpus.entries.push_back({"C" + std::to_string(n), cycle_graph(n), {}});
    corpus.entries.push_back({"S" + std::to_string(n), star_graph(n), {}});
    corpus.entries.push_back({"K" + std::to_string(n), complete_graph(n), {}});
  }

  const auto count = static_cast<std::ptrdiff_t>(corpus.entries.size());
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    label_entry(corpus.entries[static_cast<std::size_t>(i)], static_cast<std::size_t>(i), options);
  }
  return corpus;
}

}  // namespace iasi
