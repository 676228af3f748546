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

// Executable theorem suite. Each theorem T1..T13 is run over a corpus as one
// or more checks; a check either holds on every instance, records the
// smallest counterexample it met, or is inconclusive because a bounded
// search ran out of budget.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iasi/corpus.hpp"
#include "iasi/json_io.hpp"

namespace iasi {

enum class Verdict { holds, counterexample, inconclusive };

std::string_view to_string(Verdict v);

// A serialized instance plus what was observed on it. `observation` is the
// JSON dump produced by the check; replaying the instance recomputes it.
struct Counterexample {
  std::string kind;
  std::string graph_name;
  // Edge-list and labeling documents.
  std::string graph;
  std::string labeling;
  // Kind-specific parameters (edge, vertex, search spec).
  Json params;
  std::string observation;
  std::size_t vertices = 0;
  std::size_t edges = 0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::holds;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::size_t inconclusive = 0;
  // Smallest violating instance by (vertices, edges), first in corpus order
  // among ties.
  std::optional<Counterexample> counterexample;
};

struct TheoremReport {
  std::string id;
  std::string claim;
  // The first check is the literal claim; its verdict is the theorem's.
  std::vector<CheckResult> checks;
  Verdict verdict() const { return checks.empty() ? Verdict::holds : checks.front().verdict; }
};

struct HarnessOptions {
  std::size_t max_n = 5;
  std::uint64_t seed = 1;
  // Run a single theorem, e.g. "T7".
  std::optional<std::string> theorem;
  bool parallel = true;
  // Node budget for the search-based readings of T7..T11.
  std::uint64_t search_node_budget = 20000;
  // T12/T13 are exhaustive and limited to graphs this small.
  std::size_t bound_check_max_n = 5;
};

struct SuiteReport {
  HarnessOptions options;
  std::size_t graphs = 0;
  std::size_t labelings = 0;
  std::vector<TheoremReport> theorems;
};

// Identifiers T1..T13 in order.
const std::vector<std::string>& theorem_ids();

// Throws SpecError for an unknown theorem id.
SuiteReport run_suite(const Corpus& corpus, const HarnessOptions& options);

// Builds the corpus from the options (n_max = max_n, same seed) and runs it.
SuiteReport run_harness(const HarnessOptions& options);

// Recomputes the observation for a serialized instance. Search budgets are
// part of `params`, so the result is reproducible.
std::string replay(const Counterexample& cex);

Json suite_to_json(const SuiteReport& report);
std::string format_suite(const SuiteReport& report);

Json counterexample_to_json(const Counterexample& c);
Counterexample counterexample_from_json(const Json& j);

}  // namespace iasi
