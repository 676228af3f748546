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

#include "iasi/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

#include "iasi/bounds.hpp"
#include "iasi/error.hpp"

namespace iasi {

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::iasi: return "iasi";
    case SearchMode::weak: return "weak";
    case SearchMode::strong: return "strong";
  }
  return "iasi";
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::timeout: return "timeout";
  }
  return "exhausted";
}

SearchMode search_mode_from_string(std::string_view s) {
  if (s == "iasi") return SearchMode::iasi;
  if (s == "weak") return SearchMode::weak;
  if (s == "strong") return SearchMode::strong;
  throw ParseError("unknown search mode '" + std::string(s) + "'", 0);
}

SearchStatus search_status_from_string(std::string_view s) {
  if (s == "found") return SearchStatus::found;
  if (s == "exhausted") return SearchStatus::exhausted;
  if (s == "timeout") return SearchStatus::timeout;
  throw ParseError("unknown search status '" + std::string(s) + "'", 0);
}

bool satisfies(const VerificationReport& report, SearchMode mode) {
  switch (mode) {
    case SearchMode::iasi: return report.is_iasi;
    case SearchMode::weak: return report.is_weak_iasi();
    case SearchMode::strong: return report.is_strong_iasi();
  }
  return false;
}

void validate(const SearchSpec& spec) {
  if (spec.ground.empty()) throw SpecError("ground set must be non-empty");
  const std::size_t m = spec.ground.size();
  if (m > kMaxSearchGround) {
    throw SpecError("ground set of " + std::to_string(m) + " elements exceeds the search limit of " +
                    std::to_string(kMaxSearchGround));
  }
  if (2 * spec.ground.max() > spec.ground.universe_bound()) {
    throw SpecError("sums of ground elements exceed the universe bound");
  }
  if (spec.uniform_vertex_size && (*spec.uniform_vertex_size == 0 || *spec.uniform_vertex_size > m)) {
    throw SpecError("uniform vertex size must be in [1, |ground|]");
  }
  if (spec.max_label_size && *spec.max_label_size == 0) {
    throw SpecError("max label size must be at least 1");
  }
}

std::vector<IntSet> candidate_labels(const SearchSpec& spec) {
  validate(spec);
  const auto elems = spec.ground.elements();
  const std::size_t m = elems.size();
  std::size_t lo = 1;
  std::size_t hi = m;
  if (spec.max_label_size) hi = std::min(hi, *spec.max_label_size);
  if (spec.uniform_vertex_size) lo = hi = *spec.uniform_vertex_size;
  if (spec.max_label_size && spec.uniform_vertex_size && *spec.uniform_vertex_size > *spec.max_label_size) {
    return {};
  }
  std::vector<IntSet> out;
  const std::uint32_t full = std::uint32_t{1} << m;
  for (std::size_t size = lo; size <= hi; ++size) {
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      IntSet s(spec.ground.universe_bound());
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) s.insert(elems[i]);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Graph::Index> search_vertex_order(const Graph& g) {
  std::vector<Graph::Index> order(g.vertex_count());
  for (Graph::Index i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Graph::Index a, Graph::Index b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return g.name(a) < g.name(b);
  });
  return order;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kNoAbort = std::numeric_limits<std::size_t>::max();

// Read-only state shared by every worker.
struct Problem {
  const Graph& graph;
  const SearchSpec& spec;
  std::vector<Graph::Index> order;
  // earlier[k]: positions < k adjacent to the vertex at position k.
  std::vector<std::vector<std::size_t>> earlier;
  std::vector<IntSet> candidates;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t>* shared_nodes = nullptr;
};

Problem make_problem(const Graph& g, const SearchSpec& spec) {
  Problem p{g, spec, search_vertex_order(g), {}, candidate_labels(spec), std::nullopt, nullptr};
  std::vector<std::size_t> position(g.vertex_count());
  for (std::size_t k = 0; k < p.order.size(); ++k) position[p.order[k]] = k;
  p.earlier.resize(p.order.size());
  for (std::size_t k = 0; k < p.order.size(); ++k) {
    for (Graph::Index w : g.adjacency(p.order[k])) {
      if (position[w] < k) p.earlier[k].push_back(position[w]);
    }
    std::sort(p.earlier[k].begin(), p.earlier[k].end());
  }
  if (spec.time_budget) {
    p.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*spec.time_budget);
  }
  return p;
}

bool edge_allowed(SearchMode mode, const IntSet& a, const IntSet& b, std::size_t sum_size) {
  if (mode == SearchMode::iasi) return true;
  const EdgeClass c = classify_edge(a, b, sum_size);
  if (c == EdgeClass::both) return true;
  return mode == SearchMode::weak ? c == EdgeClass::weak : c == EdgeClass::strong;
}

enum class Stop { none, budget, aborted };

// One depth-first worker. In parallel mode each worker owns the subtree of a
// single first-vertex candidate (`subtree`) and abandons it once a lower
// subtree has produced a solution.
class Searcher {
 public:
  Searcher(const Problem& p, const std::atomic<std::size_t>* best, std::size_t subtree)
      : p_(p),
        assigned_(p.order.size()),
        used_(p.candidates.size(), 0),
        best_(best),
        subtree_(subtree) {}

  bool run_from(std::size_t k) { return dfs(k); }

  // Fixes position k to candidate c; false if it conflicts.
  bool place(std::size_t k, std::size_t c) {
    if (!tick()) return false;
    if (used_[c]) return false;
    const IntSet& label = p_.candidates[c];
    std::size_t added = 0;
    bool ok = true;
    for (std::size_t q : p_.earlier[k]) {
      const IntSet& other = p_.candidates[assigned_[q]];
      IntSet s = sumset(label, other);
      if (!edge_allowed(p_.spec.mode, label, other, s.size())) {
        ok = false;
        break;
      }
      auto [it, inserted] = edge_labels_.insert(std::move(s));
      if (!inserted) {
        ok = false;
        break;
      }
      edge_stack_.push_back(&*it);
      ++added;
    }
    if (!ok) {
      unwind_edges(added);
      return false;
    }
    assigned_[k] = c;
    used_[c] = 1;
    added_per_level_.push_back(added);
    return true;
  }

  void unplace(std::size_t k) {
    used_[assigned_[k]] = 0;
    unwind_edges(added_per_level_.back());
    added_per_level_.pop_back();
  }

  Stop stop() const { return stop_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::size_t>& assigned() const { return assigned_; }

 private:
  bool dfs(std::size_t k) {
    if (k == p_.order.size()) return true;
    for (std::size_t c = 0; c < p_.candidates.size(); ++c) {
      const bool placed = place(k, c);
      if (stop_ != Stop::none) {
        if (placed) unplace(k);
        return false;
      }
      if (!placed) continue;
      if (dfs(k + 1)) return true;
      unplace(k);
      if (stop_ != Stop::none) return false;
    }
    return false;
  }

  void unwind_edges(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      edge_labels_.erase(edge_labels_.find(*edge_stack_.back()));
      edge_stack_.pop_back();
    }
  }

  // Counts one placement attempt; false once the node budget is spent.
  bool tick() {
    std::uint64_t total = nodes_ + 1;
    if (p_.shared_nodes != nullptr) total = p_.shared_nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    if (p_.spec.node_budget && total > *p_.spec.node_budget) {
      stop_ = Stop::budget;
      return false;
    }
    ++nodes_;
    if ((nodes_ & 0x3FF) == 0) {
      if (p_.deadline && Clock::now() > *p_.deadline) stop_ = Stop::budget;
      if (best_ != nullptr && best_->load(std::memory_order_relaxed) < subtree_) stop_ = Stop::aborted;
    }
    return true;
  }

  const Problem& p_;
  std::vector<std::size_t> assigned_;
  std::vector<char> used_;
  std::unordered_set<IntSet> edge_labels_;
  std::vector<const IntSet*> edge_stack_;
  std::vector<std::size_t> added_per_level_;
  std::uint64_t nodes_ = 0;
  Stop stop_ = Stop::none;
  const std::atomic<std::size_t>* best_;
  std::size_t subtree_;
};

SetLabeling to_labeling(const Problem& p, const std::vector<std::size_t>& assigned) {
  SetLabeling f;
  for (std::size_t k = 0; k < p.order.size(); ++k) {
    f.assign(p.graph.name(p.order[k]), p.candidates[assigned[k]]);
  }
  return f;
}

SearchOutcome finish(const Problem& p, const std::vector<std::size_t>& assigned,
                     std::uint64_t nodes) {
  SearchOutcome out;
  out.status = SearchStatus::found;
  out.nodes_expanded = nodes;
  out.labeling = to_labeling(p, assigned);
  out.report = verify(p.graph, *out.labeling);
  if (!satisfies(*out.report, p.spec.mode)) {
    throw std::logic_error("search produced a labeling that fails verification");
  }
  return out;
}

SearchOutcome search_serial(const Problem& p) {
  Searcher s(p, nullptr, 0);
  const bool found = s.run_from(0);
  if (found) return finish(p, s.assigned(), s.nodes());
  SearchOutcome out;
  out.status = s.stop() == Stop::budget ? SearchStatus::timeout : SearchStatus::exhausted;
  out.nodes_expanded = s.nodes();
  return out;
}

SearchOutcome search_parallel(Problem& p) {
  enum class Sub { exhausted, found, timeout, aborted };
  const std::size_t width = p.candidates.size();
  std::vector<Sub> status(width, Sub::exhausted);
  std::vector<std::vector<std::size_t>> solutions(width);
  std::atomic<std::size_t> best{kNoAbort};
  std::atomic<std::uint64_t> nodes{0};
  p.shared_nodes = &nodes;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < width; ++c) {
    if (best.load(std::memory_order_relaxed) < c) {
      status[c] = Sub::aborted;
      continue;
    }
    Searcher s(p, &best, c);
    const bool placed = s.place(0, c);
    const bool found = placed && s.stop() == Stop::none && s.run_from(1);
    if (found) {
      status[c] = Sub::found;
      solutions[c] = s.assigned();
      std::size_t cur = best.load();
      while (c < cur && !best.compare_exchange_weak(cur, c)) {
      }
    } else if (s.stop() == Stop::budget) {
      status[c] = Sub::timeout;
    } else if (s.stop() == Stop::aborted) {
      status[c] = Sub::aborted;
    }
  }
  p.shared_nodes = nullptr;
  // Rejected attempts past the budget still bumped the shared counter.
  const std::uint64_t spent = p.spec.node_budget ? std::min(nodes.load(), *p.spec.node_budget) : nodes.load();

  // The first subtree that is not exhausted decides, exactly as the serial
  // scan would.
  for (std::size_t c = 0; c < width; ++c) {
    if (status[c] == Sub::found) return finish(p, solutions[c], spent);
    if (status[c] == Sub::timeout || status[c] == Sub::aborted) {
      SearchOutcome out;
      out.status = SearchStatus::timeout;
      out.nodes_expanded = spent;
      return out;
    }
  }
  SearchOutcome out;
  out.nodes_expanded = spent;
  return out;
}

}  // namespace

SearchOutcome find_labeling(const Graph& g, const SearchSpec& spec) {
  if (g.vertex_count() == 0) throw SpecError("search needs a non-empty graph");
  Problem p = make_problem(g, spec);
  if (spec.parallel && omp_get_max_threads() > 1) return search_parallel(p);
  return search_serial(p);
}

namespace {

// Advances `idx` to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<std::uint64_t>& idx, std::uint64_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

MinimalGroundResult minimal_ground_set(const Graph& g, const MinimalGroundOptions& options) {
  if (g.vertex_count() == 0) throw SpecError("search needs a non-empty graph");
  const std::size_t n = g.vertex_count();
  std::size_t start = ground_set_lower_bound(n);
  if (options.uniform_vertex_size) {
    start = std::max(start, uniform_ground_set_lower_bound(n, *options.uniform_vertex_size));
  }
  std::optional<Clock::time_point> deadline;
  if (options.time_budget) {
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*options.time_budget);
  }

  MinimalGroundResult result;
  result.lower_bound = start;
  std::uint64_t total_nodes = 0;

  auto attempt = [&](const IntSet& ground) -> SearchOutcome {
    SearchSpec spec;
    spec.mode = options.mode;
    spec.ground = ground;
    spec.max_label_size = options.max_label_size;
    spec.uniform_vertex_size = options.uniform_vertex_size;
    spec.node_budget = options.node_budget;
    spec.parallel = options.parallel;
    if (deadline) {
      spec.time_budget = std::max(Clock::duration::zero(), *deadline - Clock::now());
    }
    SearchOutcome o = find_labeling(g, spec);
    total_nodes += o.nodes_expanded;
    return o;
  };

  for (std::size_t m = start; m <= options.max_ground; ++m) {
    bool any_timeout = false;
    if (options.exact_cap) {
      const std::uint64_t pool = *options.exact_cap + 1;
      if (m > pool) break;
      std::vector<std::uint64_t> idx(m);
      for (std::size_t i = 0; i < m; ++i) idx[i] = i;
      do {
        const IntSet ground = IntSet::from_elements(idx, options.universe_bound);
        SearchOutcome o = attempt(ground);
        if (o.status == SearchStatus::found) {
          result.status = SearchStatus::found;
          result.m = m;
          result.ground = ground;
          o.nodes_expanded = total_nodes;
          result.outcome = std::move(o);
          return result;
        }
        any_timeout = any_timeout || o.status == SearchStatus::timeout;
        if (deadline && Clock::now() > *deadline) break;
      } while (next_combination(idx, pool));
    } else {
      const IntSet ground = IntSet::prefix(m, options.universe_bound);
      SearchOutcome o = attempt(ground);
      if (o.status == SearchStatus::found) {
        result.status = SearchStatus::found;
        result.m = m;
        result.ground = ground;
        o.nodes_expanded = total_nodes;
        result.outcome = std::move(o);
        return result;
      }
      any_timeout = o.status == SearchStatus::timeout;
    }
    if (any_timeout || (deadline && Clock::now() > *deadline)) {
      result.status = SearchStatus::timeout;
      result.outcome.status = SearchStatus::timeout;
      result.outcome.nodes_expanded = total_nodes;
      return result;
    }
    result.lower_bound = m + 1;
  }
  result.status = SearchStatus::exhausted;
  result.outcome.status = SearchStatus::exhausted;
  result.outcome.nodes_expanded = total_nodes;
  return result;
}

}  // namespace iasi
