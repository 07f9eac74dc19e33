// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The eczcs Authors
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

#include <benchmark/benchmark.h>

#include <filesystem>

#include "eczcs/channel_sim.hpp"
#include "eczcs/correlation.hpp"
#include "eczcs/gbf.hpp"
#include "eczcs/gsm_training.hpp"
#include "eczcs/io.hpp"
#include "eczcs/verify.hpp"

namespace {

const eczcs::Family& table(const char* name) {
  static const eczcs::Family t4 =
      eczcs::load_family(std::filesystem::path(ECZCS_FIXTURE_DIR) / "table4.txt");
  static const eczcs::Family t5 =
      eczcs::load_family(std::filesystem::path(ECZCS_FIXTURE_DIR) / "table5.txt");
  return std::string_view(name) == "table4" ? t4 : t5;
}

void BM_SetSumProfile(benchmark::State& state) {
  const auto& f = table("table5");
  for (auto _ : state) {
    benchmark::DoNotOptimize(eczcs::profile(eczcs::CorrelationKind::kSetSum, f[0], f[2]));
  }
}
BENCHMARK(BM_SetSumProfile);

void BM_CheckEczcs(benchmark::State& state) {
  const auto& f = table("table5");
  for (auto _ : state) benchmark::DoNotOptimize(eczcs::check_eczcs(f, 8));
}
BENCHMARK(BM_CheckEczcs);

void BM_Theorem3(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto spec = eczcs::Theorem3Spec{eczcs::optimal_theorem3_params(m, 2, 1), 2, 1, {}};
  for (auto _ : state) benchmark::DoNotOptimize(eczcs::theorem3_construct(spec));
}
BENCHMARK(BM_Theorem3)->Arg(5)->Arg(8)->Arg(10);

void BM_MonteCarlo(benchmark::State& state) {
  const auto psi = eczcs::build_training_matrix(table("table4"), {4, 2}, "table4");
  eczcs::SimConfig cfg;
  cfg.trials = 200;
  cfg.lambdas = {9};
  for (auto _ : state) benchmark::DoNotOptimize(eczcs::monte_carlo_mse(psi, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cfg.trials));
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
