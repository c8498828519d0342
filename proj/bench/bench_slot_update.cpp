// Copyright 2026 The proxbp Authors.
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

// Serial vs OpenMP slot updates on grid networks.

#include <benchmark/benchmark.h>

#include "proxbp/dpp_baseline.hpp"
#include "proxbp/harness.hpp"
#include "proxbp/prox_backpressure.hpp"

namespace {

using namespace proxbp;

Scenario grid(const benchmark::State& st) {
  const int side = static_cast<int>(st.range(0));
  return make_grid_scenario(side, side, static_cast<int>(st.range(1)), 7);
}

// Warm state so links are not all idle.
BpState warm(const Scenario& s, const AlgConfig& cfg) {
  BpState state = BpState::initial(s);
  for (int t = 0; t < 20; ++t) state = slot_update(state, s, cfg).next;
  return state;
}

template <bool kParallel>
void BM_NewSlot(benchmark::State& st) {
  const Scenario s = grid(st);
  const AlgConfig cfg = AlgConfig::defaults(s.network());
  const BpState state = warm(s, cfg);
  for (auto _ : st) {
    SlotResult r = kParallel ? slot_update_parallel(state, s, cfg)
                             : slot_update(state, s, cfg);
    benchmark::DoNotOptimize(r.y.x.data());
  }
  st.SetItemsProcessed(st.iterations() * s.link_count());
}

template <bool kParallel>
void BM_DppSlot(benchmark::State& st) {
  const Scenario s = grid(st);
  DppConfig cfg;
  NodeField q = NodeField::zeros(s);
  for (size_t i = 0; i < q.values.size(); ++i) q.values[i] = double(i % 17);
  for (auto _ : st) {
    DecisionVector y = kParallel ? dpp_slot_update_parallel(q, s, cfg)
                                 : dpp_slot_update(q, s, cfg);
    benchmark::DoNotOptimize(y.x.data());
  }
  st.SetItemsProcessed(st.iterations() * s.link_count());
}

void Sizes(benchmark::internal::Benchmark* b) {
  b->Args({8, 8})->Args({16, 16})->Args({32, 32})->UseRealTime();
}

BENCHMARK(BM_NewSlot<false>)->Name("new_slot/serial")->Apply(Sizes);
BENCHMARK(BM_NewSlot<true>)->Name("new_slot/parallel")->Apply(Sizes);
BENCHMARK(BM_DppSlot<false>)->Name("dpp_slot/serial")->Apply(Sizes);
BENCHMARK(BM_DppSlot<true>)->Name("dpp_slot/parallel")->Apply(Sizes);

}  // namespace

BENCHMARK_MAIN();
