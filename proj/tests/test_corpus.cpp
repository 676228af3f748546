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
#include "iasi/corpus.hpp"
#include "iasi/error.hpp"
#include "iasi/verify.hpp"
#include "oracle.hpp"

using iasi::Graph;

namespace {

std::vector<std::string> names(const iasi::Corpus& c) {
  std::vector<std::string> out;
  for (const auto& e : c.entries) out.push_back(e.name);
  return out;
}

bool same_corpus(const iasi::Corpus& a, const iasi::Corpus& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.name != y.name || !(x.graph == y.graph) || x.labelings.size() != y.labelings.size()) return false;
    for (std::size_t k = 0; k < x.labelings.size(); ++k) {
      if (x.labelings[k].source != y.labelings[k].source || !(x.labelings[k].labeling == y.labelings[k].labeling)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("enumeration counts against brute-force isomorphism classes") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(iasi::enumerate_graphs(n, true).size() == oracle::count_unlabeled(n, true));
      CHECK(iasi::enumerate_graphs(n, false).size() == oracle::count_unlabeled(n, false));
    }
    // published counts for six vertices
    CHECK(iasi::enumerate_graphs(6, true).size() == 112);
    CHECK(iasi::enumerate_graphs(6, false).size() == 156);
  }

  TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto graphs = iasi::enumerate_graphs(n, false);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < graphs.size(); ++j) CHECK_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
        CHECK(graphs[i].vertex_count() == n);
        if (i > 0) CHECK(graphs[i - 1].edge_count() <= graphs[i].edge_count());
      }
    }
  }

  TEST_CASE("canonical code is an isomorphism invariant") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto graphs = oracle::all_labeled_graphs(n);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i; j < graphs.size(); ++j) {
          CHECK((iasi::canonical_code(graphs[i]) == iasi::canonical_code(graphs[j])) ==
                oracle::isomorphic(graphs[i], graphs[j]));
        }
      }
    }
  }

  TEST_CASE("corpus sizes") {
    iasi::CorpusOptions o;
    o.n_max = 3;
    const auto c3 = iasi::generate_corpus(o);
    CHECK(names(c3) == std::vector<std::string>{"K2", "P3", "K3"});
    o.n_max = 4;
    CHECK(iasi::generate_corpus(o).entries.size() == 9);
    o.family_cap = 6;
    const auto fam = iasi::generate_corpus(o);
    CHECK(fam.entries.size() == 9 + 8);
    CHECK(fam.entries[9].name == "P5");
    CHECK(fam.entries.back().name == "K6");
    CHECK(oracle::isomorphic(fam.entries.back().graph, iasi::complete_graph(6)));
  }

  TEST_CASE("families") {
    CHECK(iasi::path_graph(4).edge_count() == 3);
    CHECK(iasi::cycle_graph(5).edge_count() == 5);
    CHECK(iasi::star_graph(5).degree("a") == 4);
    CHECK(iasi::complete_graph(5).edge_count() == 10);
    CHECK_THROWS_AS(iasi::cycle_graph(2), iasi::SpecError);
  }

  TEST_CASE("invalid options") {
    iasi::CorpusOptions o;
    o.n_max = 1;
    CHECK_THROWS_AS(iasi::generate_corpus(o), iasi::SpecError);
    o.n_max = 7;
    CHECK_THROWS_AS(iasi::generate_corpus(o), iasi::SpecError);
    o.n_max = 3;
    o.family_cap = 7;
    CHECK_THROWS_AS(iasi::generate_corpus(o), iasi::SpecError);
    CHECK_THROWS_AS(iasi::enumerate_graphs(8, false), iasi::SpecError);
  }

  TEST_CASE("labelings are distinct IASIs") {
    iasi::CorpusOptions o;
    o.n_max = 5;
    o.family_cap = 6;
    const auto c = iasi::generate_corpus(o);
    for (const auto& e : c.entries) {
      REQUIRE_FALSE(e.labelings.empty());
      CHECK(e.labelings.front().source == "canonical");
      for (std::size_t i = 0; i < e.labelings.size(); ++i) {
        CHECK(iasi::verify(e.graph, e.labelings[i].labeling).is_iasi);
        for (std::size_t j = i + 1; j < e.labelings.size(); ++j) {
          CHECK_FALSE(e.labelings[i].labeling == e.labelings[j].labeling);
        }
      }
    }
  }

  TEST_CASE("seed drives labelings only, and runs are reproducible") {
    iasi::CorpusOptions o;
    o.n_max = 4;
    const auto a = iasi::generate_corpus(o);
    const auto again = iasi::generate_corpus(o);
    CHECK(same_corpus(a, again));
    o.parallel = false;
    CHECK(same_corpus(a, iasi::generate_corpus(o)));
    o.seed = 99;
    const auto b = iasi::generate_corpus(o);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].name == b.entries[i].name);
      CHECK(a.entries[i].graph == b.entries[i].graph);
    }
    CHECK_FALSE(same_corpus(a, b));
  }
}
