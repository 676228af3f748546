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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/int_set.hpp"
#include "iasi/set_labeling.hpp"
#include "iasi/verify.hpp"

namespace iasi {

enum class SearchMode { iasi, weak, strong };
enum class SearchStatus { found, exhausted, timeout };

std::string_view to_string(SearchMode m);
std::string_view to_string(SearchStatus s);
// Throws ParseError for an unknown name.
SearchMode search_mode_from_string(std::string_view s);
SearchStatus search_status_from_string(std::string_view s);

// True when the report satisfies the mode (an IASI, plus weak/strong).
bool satisfies(const VerificationReport& report, SearchMode mode);

// Largest ground set the backtracking search accepts; candidates are all
// non-empty subsets of the ground.
inline constexpr std::size_t kMaxSearchGround = 20;

struct SearchSpec {
  SearchMode mode = SearchMode::iasi;
  IntSet ground;
  std::optional<std::size_t> max_label_size;
  // Every vertex label has exactly this many elements.
  std::optional<std::size_t> uniform_vertex_size;
  // Wall-clock cap. Results that hit it are machine dependent.
  std::optional<std::chrono::duration<double>> time_budget;
  // Cap on nodes_expanded; reproducible, unlike time_budget.
  std::optional<std::uint64_t> node_budget;
  // Splits the first vertex's candidates across OpenMP threads. The returned
  // labeling is the same one the serial search finds; nodes_expanded is not.
  bool parallel = false;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<SetLabeling> labeling;
  // Candidate placements attempted, successful or not.
  std::uint64_t nodes_expanded = 0;
  std::optional<VerificationReport> report;
};

// Throws SpecError for an empty ground, a ground above kMaxSearchGround
// elements, sums outside the universe, or size constraints that are zero or
// exceed |ground|.
void validate(const SearchSpec& spec);

// Depth-first backtracking. Vertices are fixed in order of descending degree
// (ties by name); candidates run by ascending size, then ascending bit
// pattern over the ground. Pruning rejects a candidate that repeats a vertex
// label, produces an edge label already in use, or violates the mode on a
// new edge. `exhausted` proves that no labeling exists within the spec.
// Every found labeling is re-verified before it is returned.
SearchOutcome find_labeling(const Graph& g, const SearchSpec& spec);

// Candidate labels in search order.
std::vector<IntSet> candidate_labels(const SearchSpec& spec);
// The order in which vertices are fixed.
std::vector<Graph::Index> search_vertex_order(const Graph& g);

struct MinimalGroundOptions {
  SearchMode mode = SearchMode::iasi;
  std::optional<std::size_t> uniform_vertex_size;
  std::optional<std::size_t> max_label_size;
  // Largest m tried.
  std::size_t max_ground = 12;
  // Whole-run wall clock cap.
  std::optional<std::chrono::duration<double>> time_budget;
  // Per find_labeling call.
  std::optional<std::uint64_t> node_budget;
  bool parallel = false;
  // When set, every m-subset of {0..exact_cap} is tried instead of only the
  // prefix {0..m-1}. Only sensible for tiny instances.
  std::optional<std::uint64_t> exact_cap;
  std::uint64_t universe_bound = kDefaultUniverseBound;
};

struct MinimalGroundResult {
  SearchStatus status = SearchStatus::exhausted;
  // Size of the smallest ground that admits a labeling, when found.
  std::optional<std::size_t> m;
  // Best known lower bound: every smaller ground size was refuted or is
  // excluded by the counting bounds.
  std::size_t lower_bound = 0;
  std::optional<IntSet> ground;
  SearchOutcome outcome;
};

// Starts at the counting lower bound (and the binomial bound when a uniform
// vertex size is requested) and walks m upward. `exhausted` means no ground
// of size <= max_ground works; `timeout` reports the bounds reached.
MinimalGroundResult minimal_ground_set(const Graph& g, const MinimalGroundOptions& options);

}  // namespace iasi
