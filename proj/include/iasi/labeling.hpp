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

#include "iasi/graph.hpp"
#include "iasi/int_set.hpp"
#include "iasi/set_labeling.hpp"

namespace iasi {

// Throws GraphError unless f labels exactly the vertices of g.
void require_coverage(const Graph& g, const SetLabeling& f);

// g_f(uv) = f(u) + f(v) for every edge.
std::map<EdgeId, IntSet> induced_edge_labels(const Graph& g, const SetLabeling& f);

// f(v_i) = {2^i} in vertex order. Distinct powers of two have distinct
// pairwise sums (binary expansions are unique), so the result is always an
// IASI, 1-uniform, and both weak and strong. Throws BoundExceeded when a
// label or an edge sum would leave the universe.
SetLabeling canonical_iasi(const Graph& g, std::uint64_t universe_bound = kDefaultUniverseBound);

// f restricted to V(h). Throws GraphError if h is not a subgraph of g or f
// does not cover g.
SetLabeling restrict(const Graph& g, const SetLabeling& f, const Graph& h);

}  // namespace iasi
