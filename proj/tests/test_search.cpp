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

#include "doctest.h"
#include "iasi/bounds.hpp"
#include "iasi/corpus.hpp"
#include "iasi/error.hpp"
#include "iasi/search.hpp"
#include "oracle.hpp"

using iasi::Graph;
using iasi::IntSet;
using iasi::SearchMode;
using iasi::SearchSpec;
using iasi::SearchStatus;

namespace {

oracle::Mode to_oracle(SearchMode m) {
  switch (m) {
    case SearchMode::iasi: return oracle::Mode::iasi;
    case SearchMode::weak: return oracle::Mode::weak;
    case SearchMode::strong: return oracle::Mode::strong;
  }
  return oracle::Mode::iasi;
}

SearchSpec spec_for(SearchMode mode, std::size_t m, std::optional<std::size_t> uniform = std::nullopt) {
  SearchSpec spec;
  spec.mode = mode;
  spec.ground = IntSet::prefix(m);
  spec.uniform_vertex_size = uniform;
  return spec;
}

constexpr SearchMode kModes[] = {SearchMode::iasi, SearchMode::weak, SearchMode::strong};

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("ground set bounds") {
    CHECK(iasi::ground_set_lower_bound(7) == 3);
    CHECK(iasi::ground_set_lower_bound(1) == 1);
    CHECK(iasi::ground_set_lower_bound(8) == 4);
    CHECK(iasi::uniform_ground_set_lower_bound(6, 2) == 4);
    CHECK(iasi::uniform_ground_set_lower_bound(1, 1) == 1);
    CHECK(iasi::uniform_ground_set_lower_bound(11, 2) == 6);
    CHECK_THROWS_AS(iasi::ground_set_lower_bound(0), iasi::SpecError);
    CHECK_THROWS_AS(iasi::uniform_ground_set_lower_bound(3, 0), iasi::SpecError);
    CHECK(iasi::binomial(5, 2) == 10);
    CHECK(iasi::binomial(3, 5) == 0);
  }

  TEST_CASE("bounds agree with direct counting") {
    for (std::size_t n = 1; n <= 300; ++n) {
      std::size_t m = 0;
      while ((std::size_t{1} << m) < n + 1) ++m;
      CHECK(iasi::ground_set_lower_bound(n) == m);
      for (std::size_t l = 1; l <= 4; ++l) {
        std::size_t k = l;
        auto choose = [](std::size_t a, std::size_t b) {
          double c = 1;
          for (std::size_t i = 0; i < b; ++i) c = c * static_cast<double>(a - i) / static_cast<double>(i + 1);
          return c;
        };
        while (choose(k, l) < static_cast<double>(n)) ++k;
        CHECK(iasi::uniform_ground_set_lower_bound(n, l) == k);
      }
    }
  }

  TEST_CASE("find_labeling examples") {
    const Graph k2 = iasi::parse_graph("a b");
    const auto found = iasi::find_labeling(k2, spec_for(SearchMode::iasi, 2));
    CHECK(found.status == SearchStatus::found);
    REQUIRE(found.labeling.has_value());
    CHECK(found.labeling->at("a") == IntSet{0});
    CHECK(found.labeling->at("b") == IntSet{1});
    REQUIRE(found.report.has_value());
    CHECK(found.report->is_iasi);

    const Graph k3 = iasi::parse_graph("a b\nb c\na c");
    const auto none = iasi::find_labeling(k3, spec_for(SearchMode::iasi, 1));
    CHECK(none.status == SearchStatus::exhausted);
    CHECK_FALSE(none.labeling.has_value());

    const Graph p3 = iasi::parse_graph("a b\nb c");
    const bool expected = oracle::exists_labeling(p3, {0, 1, 2}, oracle::Mode::strong, 2);
    const auto r = iasi::find_labeling(p3, spec_for(SearchMode::strong, 3, 2));
    CHECK((r.status == SearchStatus::found) == expected);
  }

  TEST_CASE("search order") {
    SearchSpec spec = spec_for(SearchMode::iasi, 3);
    const auto cands = iasi::candidate_labels(spec);
    REQUIRE(cands.size() == 7);
    CHECK(cands[0] == IntSet{0});
    CHECK(cands[1] == IntSet{1});
    CHECK(cands[2] == IntSet{2});
    CHECK(cands[3] == IntSet{0, 1});
    CHECK(cands[4] == IntSet{0, 2});
    CHECK(cands[5] == IntSet{1, 2});
    CHECK(cands[6] == IntSet{0, 1, 2});
    spec.max_label_size = 1;
    CHECK(iasi::candidate_labels(spec).size() == 3);
    spec.max_label_size.reset();
    spec.uniform_vertex_size = 2;
    CHECK(iasi::candidate_labels(spec).size() == 3);

    const Graph g = iasi::parse_graph("b a\nc a\nd c\ne c");
    const auto order = iasi::search_vertex_order(g);
    std::vector<std::string> names;
    for (auto v : order) names.push_back(g.name(v));
    CHECK(names == std::vector<std::string>{"c", "a", "b", "d", "e"});
  }

  TEST_CASE("spec validation") {
    const Graph k2 = iasi::parse_graph("a b");
    SearchSpec spec;
    CHECK_THROWS_AS(iasi::find_labeling(k2, spec), iasi::SpecError);
    spec.ground = IntSet::prefix(21);
    CHECK_THROWS_AS(iasi::find_labeling(k2, spec), iasi::SpecError);
    spec.ground = IntSet{0, 3000};
    CHECK_THROWS_AS(iasi::find_labeling(k2, spec), iasi::SpecError);
    spec.ground = IntSet::prefix(3);
    spec.uniform_vertex_size = 0;
    CHECK_THROWS_AS(iasi::find_labeling(k2, spec), iasi::SpecError);
    spec.uniform_vertex_size = 4;
    CHECK_THROWS_AS(iasi::find_labeling(k2, spec), iasi::SpecError);
    spec.uniform_vertex_size.reset();
    spec.max_label_size = 0;
    CHECK_THROWS_AS(iasi::find_labeling(k2, spec), iasi::SpecError);
    for (auto m : kModes) CHECK(iasi::search_mode_from_string(iasi::to_string(m)) == m);
    CHECK_THROWS_AS(iasi::search_mode_from_string("medium"), iasi::ParseError);
  }

  TEST_CASE("budgets stop the search") {
    const Graph k7 = iasi::complete_graph(7);
    SearchSpec spec = spec_for(SearchMode::iasi, 3);
    const auto full = iasi::find_labeling(k7, spec);
    REQUIRE(full.status != SearchStatus::timeout);
    // the clock is read every 1024 placements
    REQUIRE(full.nodes_expanded > 1024);

    spec.node_budget = 50;
    const auto r = iasi::find_labeling(k7, spec);
    CHECK(r.status == SearchStatus::timeout);
    CHECK(r.nodes_expanded == 50);
    spec.node_budget = full.nodes_expanded;
    CHECK(iasi::find_labeling(k7, spec).status == full.status);
    spec.parallel = true;
    spec.node_budget = 50;
    CHECK(iasi::find_labeling(k7, spec).status == SearchStatus::timeout);

    spec.parallel = false;
    spec.node_budget.reset();
    spec.time_budget = std::chrono::duration<double>(0.0);
    CHECK(iasi::find_labeling(k7, spec).status == SearchStatus::timeout);
  }

  TEST_CASE("verdicts match brute force on small graphs") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const Graph& g : iasi::enumerate_graphs(n, n == 5)) {
        for (std::size_t m = 1; m <= 4; ++m) {
          for (auto mode : kModes) {
            const auto r = iasi::find_labeling(g, spec_for(mode, m));
            const bool expected = oracle::exists_labeling(g, oracle::prefix(m), to_oracle(mode));
            CHECK_MESSAGE((r.status == SearchStatus::found) == expected, iasi::format_graph(g), " m=", m);
            if (r.labeling) CHECK(oracle::judge(g, *r.labeling).satisfies(to_oracle(mode)));
          }
        }
      }
    }
  }

  TEST_CASE("uniform verdicts match brute force") {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const Graph& g : iasi::enumerate_graphs(n, false)) {
        for (std::size_t m = 2; m <= 5; ++m) {
          for (std::size_t l = 1; l <= 3 && l <= m; ++l) {
            for (auto mode : kModes) {
              const auto r = iasi::find_labeling(g, spec_for(mode, m, l));
              const bool expected = oracle::exists_labeling(g, oracle::prefix(m), to_oracle(mode), l);
              CHECK((r.status == SearchStatus::found) == expected);
              if (r.labeling) CHECK(iasi::is_l_uniformly_set_indexed(g, *r.labeling, l));
            }
          }
        }
      }
    }
  }

  TEST_CASE("parallel split returns the serial labeling") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (const Graph& g : iasi::enumerate_graphs(n, true)) {
        for (auto mode : kModes) {
          SearchSpec spec = spec_for(mode, 4);
          const auto serial = iasi::find_labeling(g, spec);
          spec.parallel = true;
          const auto parallel = iasi::find_labeling(g, spec);
          CHECK(serial.status == parallel.status);
          CHECK(serial.labeling == parallel.labeling);
        }
      }
    }
  }

  TEST_CASE("minimal ground set") {
    const Graph k2 = iasi::parse_graph("a b");
    auto r = iasi::minimal_ground_set(k2, {});
    CHECK(r.status == SearchStatus::found);
    CHECK(r.m == 2);
    CHECK(r.ground == IntSet{0, 1});

    const Graph k1 = iasi::parse_graph("vertex a");
    r = iasi::minimal_ground_set(k1, {});
    CHECK(r.m == 1);

    const Graph k3 = iasi::parse_graph("a b\nb c\na c");
    r = iasi::minimal_ground_set(k3, {});
    const std::size_t expected = oracle::exists_labeling(k3, oracle::prefix(2), oracle::Mode::iasi) ? 2 : 3;
    CHECK(r.m == expected);
    CHECK(r.lower_bound == 2);

    for (std::size_t n = 2; n <= 5; ++n) {
      for (const Graph& g : iasi::enumerate_graphs(n, true)) {
        for (auto mode : kModes) {
          iasi::MinimalGroundOptions o;
          o.mode = mode;
          o.max_ground = 7;
          const auto res = iasi::minimal_ground_set(g, o);
          if (res.status != SearchStatus::found) continue;
          CHECK(*res.m >= iasi::ground_set_lower_bound(n));
          CHECK(oracle::exists_labeling(g, oracle::prefix(*res.m), to_oracle(mode)));
          if (*res.m > 1 && *res.m <= 4) {
            CHECK_FALSE(oracle::exists_labeling(g, oracle::prefix(*res.m - 1), to_oracle(mode)));
          }
          o.uniform_vertex_size = 2;
          const auto uni = iasi::minimal_ground_set(g, o);
          if (uni.status == SearchStatus::found) CHECK(*uni.m >= iasi::uniform_ground_set_lower_bound(n, 2));
        }
      }
    }
  }

  TEST_CASE("exact mode never needs more elements than prefixes") {
    const Graph k3 = iasi::parse_graph("a b\nb c\na c");
    iasi::MinimalGroundOptions o;
    o.mode = SearchMode::strong;
    const auto prefix = iasi::minimal_ground_set(k3, o);
    o.exact_cap = 6;
    const auto exact = iasi::minimal_ground_set(k3, o);
    REQUIRE(prefix.status == SearchStatus::found);
    REQUIRE(exact.status == SearchStatus::found);
    CHECK(*exact.m <= *prefix.m);
  }

  TEST_CASE("below the counting bound nothing is found") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (const Graph& g : iasi::enumerate_graphs(n, false)) {
        const std::size_t m = iasi::ground_set_lower_bound(n) - 1;
        for (auto mode : kModes) CHECK(iasi::find_labeling(g, spec_for(mode, m)).status == SearchStatus::exhausted);
      }
    }
  }
}
