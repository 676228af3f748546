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

// Kernel comparisons: bitset sumset vs pairwise enumeration, and the
// OpenMP paths of search and harness vs their serial references.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "iasi/corpus.hpp"
#include "iasi/harness.hpp"
#include "iasi/int_set.hpp"
#include "iasi/search.hpp"

namespace {

std::vector<std::pair<iasi::IntSet, iasi::IntSet>> random_pairs(std::size_t size, std::uint64_t max_elem) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> dist(0, max_elem);
  std::vector<std::pair<iasi::IntSet, iasi::IntSet>> out(64);
  for (auto& [a, b] : out) {
    while (a.size() < size) a.insert(dist(rng));
    while (b.size() < size) b.insert(dist(rng));
  }
  return out;
}

void BM_SumsetBitset(benchmark::State& state) {
  const auto pairs = random_pairs(static_cast<std::size_t>(state.range(0)), 1000);
  for (auto _ : state) {
    for (const auto& [a, b] : pairs) benchmark::DoNotOptimize(iasi::sumset(a, b));
  }
}
BENCHMARK(BM_SumsetBitset)->Arg(4)->Arg(16)->Arg(64);

void BM_SumsetPairwise(benchmark::State& state) {
  const auto pairs = random_pairs(static_cast<std::size_t>(state.range(0)), 1000);
  std::vector<std::uint64_t> sums;
  for (auto _ : state) {
    for (const auto& [a, b] : pairs) {
      sums.clear();
      const auto xs = a.elements();
      const auto ys = b.elements();
      for (auto x : xs) {
        for (auto y : ys) sums.push_back(x + y);
      }
      std::sort(sums.begin(), sums.end());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
      benchmark::DoNotOptimize(sums.data());
    }
  }
}
BENCHMARK(BM_SumsetPairwise)->Arg(4)->Arg(16)->Arg(64);

void BM_Search(benchmark::State& state) {
  // exhausts every branch
  const iasi::Graph g = iasi::complete_graph(7);
  iasi::SearchSpec spec;
  spec.ground = iasi::IntSet::prefix(3);
  spec.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(iasi::find_labeling(g, spec));
}
BENCHMARK(BM_Search)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Harness(benchmark::State& state) {
  iasi::CorpusOptions co;
  co.n_max = 4;
  co.family_cap = 5;
  const iasi::Corpus corpus = iasi::generate_corpus(co);
  iasi::HarnessOptions ho;
  ho.max_n = 4;
  ho.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(iasi::run_suite(corpus, ho));
}
BENCHMARK(BM_Harness)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
