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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "iasi/bounds.hpp"
#include "iasi/compatibility.hpp"
#include "iasi/corpus.hpp"
#include "iasi/harness.hpp"
#include "iasi/labeling.hpp"
#include "iasi/search.hpp"
#include "iasi/verify.hpp"
#include "oracle.hpp"

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

using Pairs = std::vector<std::pair<oracle::Set, oracle::Set>>;

Pairs seeded_pairs() {
  std::mt19937_64 rng(1);
  Pairs out;
  for (int i = 0; i < 10000; ++i) {
    auto a = oracle::random_set(rng, 12, 200);
    auto b = oracle::random_set(rng, 12, 200);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

const iasi::Corpus& corpus() {
  static const iasi::Corpus c = [] {
    iasi::CorpusOptions o;
    o.n_max = 5;
    o.family_cap = 6;
    return iasi::generate_corpus(o);
  }();
  return c;
}

Result sumset_bounds() {
  Result r;
  std::size_t bad = 0;
  std::size_t mismatch = 0;
  for (const auto& [a, b] : seeded_pairs()) {
    const auto s = iasi::sumset(oracle::from_set(a), oracle::from_set(b));
    if (oracle::to_set(s) != oracle::sumset(a, b)) ++mismatch;
    if (!(std::max(a.size(), b.size()) <= s.size() && s.size() <= a.size() * b.size())) ++bad;
  }
  r.pass = bad == 0 && mismatch == 0;
  r.detail = "10000 pairs, " + std::to_string(bad) + " bound violations, " + std::to_string(mismatch) +
             " sumsets differing from pairwise enumeration";
  return r;
}

Result compatibility_identities() {
  Result r;
  std::size_t bad = 0;
  for (const auto& [a, b] : seeded_pairs()) {
    const auto x = oracle::from_set(a);
    const auto y = oracle::from_set(b);
    const std::size_t s = iasi::sumset(x, y).size();
    const std::size_t index = iasi::compatibility_index(x, y);
    const bool ok = index == s && a.size() * b.size() == index + iasi::neglecting_number(x, y) &&
                    iasi::max_class_size(x, y) <= std::min(a.size(), b.size());
    if (!ok) ++bad;
  }
  r.pass = bad == 0;
  r.detail = "10000 pairs, " + std::to_string(bad) + " violations";
  return r;
}

Result existence() {
  Result r;
  std::size_t graphs = 0;
  std::size_t failed = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : iasi::enumerate_graphs(n, true)) {
      ++graphs;
      if (!oracle::judge(g, iasi::canonical_iasi(g)).iasi() || !iasi::verify(g, iasi::canonical_iasi(g)).is_iasi) {
        ++failed;
      }
    }
  }
  r.pass = failed == 0 && graphs == 1 + 1 + 2 + 6 + 21;
  r.detail = std::to_string(graphs - failed) + "/" + std::to_string(graphs) + " connected graphs";
  return r;
}

Result heredity() {
  Result r;
  std::size_t checked = 0;
  std::size_t failed = 0;
  for (const auto& entry : corpus().entries) {
    const auto& g = entry.graph;
    for (const auto& l : entry.labelings) {
      for (const auto& e : g.edges()) {
        const auto h = iasi::without_edge(g, e);
        ++checked;
        if (!iasi::verify(h, iasi::restrict(g, l.labeling, h)).is_iasi) ++failed;
      }
      for (const auto& v : g.vertices()) {
        const auto h = iasi::without_vertex(g, v);
        ++checked;
        if (!iasi::verify(h, iasi::restrict(g, l.labeling, h)).is_iasi) ++failed;
      }
    }
  }
  r.pass = failed == 0 && checked > 0;
  r.detail = std::to_string(checked - failed) + "/" + std::to_string(checked) + " restrictions";
  return r;
}

Result search_vs_brute_force() {
  Result r;
  std::size_t cases = 0;
  std::size_t disagree = 0;
  const std::pair<iasi::SearchMode, oracle::Mode> modes[] = {{iasi::SearchMode::iasi, oracle::Mode::iasi},
                                                             {iasi::SearchMode::weak, oracle::Mode::weak},
                                                             {iasi::SearchMode::strong, oracle::Mode::strong}};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : oracle::all_labeled_graphs(n)) {
      for (std::size_t m = 1; m <= 3; ++m) {
        for (const auto& [mode, omode] : modes) {
          iasi::SearchSpec spec;
          spec.mode = mode;
          spec.ground = iasi::IntSet::prefix(m);
          const auto o = iasi::find_labeling(g, spec);
          const bool found = o.status == iasi::SearchStatus::found;
          bool ok = o.status != iasi::SearchStatus::timeout &&
                    found == oracle::exists_labeling(g, oracle::prefix(m), omode);
          if (found) ok = ok && oracle::judge(g, *o.labeling).satisfies(omode);
          ++cases;
          if (!ok) ++disagree;
        }
      }
    }
  }
  r.pass = disagree == 0;
  r.detail = std::to_string(cases) + " (graph, m, mode) cases over all labeled graphs on <= 4 vertices, " +
             std::to_string(disagree) + " disagreements";
  return r;
}

Result bound_necessity() {
  Result r;
  std::size_t log_cases = 0;
  std::size_t vacuous = 0;
  std::size_t uniform_cases = 0;
  std::size_t failed = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : iasi::enumerate_graphs(n, false)) {
      const std::size_t m = iasi::ground_set_lower_bound(n) - 1;
      if (m == 0) {
        // the empty ground has no non-empty subset at all
        ++vacuous;
      } else {
        for (auto mode : {iasi::SearchMode::iasi, iasi::SearchMode::weak, iasi::SearchMode::strong}) {
          iasi::SearchSpec spec;
          spec.mode = mode;
          spec.ground = iasi::IntSet::prefix(m);
          ++log_cases;
          if (iasi::find_labeling(g, spec).status != iasi::SearchStatus::exhausted) ++failed;
        }
      }
      for (std::size_t l = 1; l <= 3; ++l) {
        for (std::size_t k = l; iasi::binomial(k, l) < n; ++k) {
          iasi::SearchSpec spec;
          spec.ground = iasi::IntSet::prefix(k);
          spec.uniform_vertex_size = l;
          ++uniform_cases;
          if (iasi::find_labeling(g, spec).status != iasi::SearchStatus::exhausted) ++failed;
        }
      }
    }
  }
  r.pass = failed == 0;
  r.detail = std::to_string(log_cases) + " below-log-bound searches, " + std::to_string(uniform_cases) +
             " below-binomial-bound searches, " + std::to_string(vacuous) + " vacuous (m = 0), " +
             std::to_string(failed) + " found";
  return r;
}

Result trivial_classes() {
  Result r;
  std::size_t edges = 0;
  std::size_t failed = 0;
  for (const auto& entry : corpus().entries) {
    for (const auto& l : entry.labelings) {
      for (const auto& e : iasi::verify(entry.graph, l.labeling).per_edge) {
        if (e.edge_class == iasi::EdgeClass::neither) continue;
        ++edges;
        if (iasi::max_class_size(l.labeling.at(e.edge.first), l.labeling.at(e.edge.second)) != 1) ++failed;
      }
    }
  }
  r.pass = failed == 0 && edges > 0;
  r.detail = std::to_string(edges) + " weak/strong edges, " + std::to_string(failed) + " with a non-trivial class";
  return r;
}

iasi::HarnessOptions harness_options() {
  iasi::HarnessOptions o;
  o.max_n = 5;
  o.seed = 1;
  return o;
}

Result suite_runs(std::string& first_json) {
  Result r;
  const auto suite = iasi::run_harness(harness_options());
  first_json = iasi::suite_to_json(suite).dump();
  std::size_t replayed = 0;
  std::size_t diverged = 0;
  std::ostringstream verdicts;
  for (const auto& t : suite.theorems) {
    verdicts << ' ' << t.id << '=' << iasi::to_string(t.verdict());
    for (const auto& c : t.checks) {
      if (!c.counterexample) continue;
      ++replayed;
      const auto restored = iasi::counterexample_from_json(iasi::counterexample_to_json(*c.counterexample));
      if (iasi::replay(restored) != c.counterexample->observation) ++diverged;
    }
  }
  r.pass = suite.theorems.size() == 13 && diverged == 0;
  r.detail = std::to_string(suite.theorems.size()) + " theorems," + verdicts.str() + "; " +
             std::to_string(replayed) + " counterexamples replayed, " + std::to_string(diverged) + " diverged";
  return r;
}

Result determinism(const std::string& first_json) {
  Result r;
  const std::string second = iasi::suite_to_json(iasi::run_harness(harness_options())).dump();
  auto serial_options = harness_options();
  serial_options.parallel = false;
  const std::string serial = iasi::suite_to_json(iasi::run_harness(serial_options)).dump();
  r.pass = !first_json.empty() && first_json == second && second == serial;
  r.detail = std::to_string(second.size()) + "-byte reports; repeat " + (first_json == second ? "identical" : "differs") +
             ", serial " + (second == serial ? "identical" : "differs");
  return r;
}

}  // namespace

int main() {
  std::string harness_json;
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"sumset cardinality bounds", sumset_bounds},
      {"compatibility identities", compatibility_identities},
      {"canonical labeling on connected graphs <= 5 vertices", existence},
      {"heredity under edge and vertex deletion", heredity},
      {"search agrees with brute force", search_vs_brute_force},
      {"ground set bounds are necessary", bound_necessity},
      {"weak/strong edges have trivial classes", trivial_classes},
      {"harness adjudicates T1-T13 and counterexamples replay", [&] { return suite_runs(harness_json); }},
      {"harness reports are byte-identical across runs", [&] { return determinism(harness_json); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s - %s (%s) [%.2fs]\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                r.detail.c_str(), secs);
    if (!r.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
