// Copyright 2026 The movmf Authors
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

#include <string>

#include "movmf/clustering.hpp"
#include "movmf/metrics.hpp"
#include "movmf/random.hpp"
#include "movmf/synthetic.hpp"
#include "movmf/vmf.hpp"

namespace {

using namespace movmf;

MixtureSample bench_data(std::size_t d, std::size_t k, std::size_t n) {
  auto means = random_orthonormal_directions(d, k, 1);
  return sample_mixture(make_mixture(std::move(means), std::vector<double>(k, 40.0),
                                     std::vector<double>(k, 1.0)),
                        n, 2);
}

// order, x picked to land in each evaluation regime
void BM_LogBesselSeries(benchmark::State& state) {
  double x = 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(log_bessel_i(24.5, x));
}
BENCHMARK(BM_LogBesselSeries);

void BM_LogBesselLargeArgument(benchmark::State& state) {
  double x = 900.0;
  for (auto _ : state) benchmark::DoNotOptimize(log_bessel_i(24.5, x));
}
BENCHMARK(BM_LogBesselLargeArgument);

void BM_LogBesselLargeOrder(benchmark::State& state) {
  double x = 60.0;
  for (auto _ : state) benchmark::DoNotOptimize(log_bessel_i(74.5, x));
}
BENCHMARK(BM_LogBesselLargeOrder);

void BM_SampleVmf(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<double> mu(d, 0.0);
  mu[0] = 1.0;
  const VmfParams p(UnitVector::from_normalized(mu), 50.0);
  CounterRng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_vmf(p, 1000, rng));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SampleVmf)->Arg(10)->Arg(75);

void BM_EStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto data = bench_data(51, 9, n);
  const auto model = init_model(data.points, 9, 0);
  for (auto _ : state) benchmark::DoNotOptimize(e_step_hard(model, data.points));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_EStep)->Arg(1000)->Arg(10000);

void BM_Fit(benchmark::State& state) {
  const auto data = bench_data(51, 9, 5000);
  ClusterConfig c;
  c.n_clusters = 9;
  c.mode = static_cast<ClusterMode>(state.range(0));
  state.SetLabel(std::string(to_string(c.mode)));
  for (auto _ : state) benchmark::DoNotOptimize(fit(data.points, c));
}
BENCHMARK(BM_Fit)
    ->Arg(static_cast<int>(ClusterMode::kMovmf))
    ->Arg(static_cast<int>(ClusterMode::kSphericalKmeans))
    ->Arg(static_cast<int>(ClusterMode::kMovmfTied))
    ->Unit(benchmark::kMillisecond);

void BM_Hungarian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CounterRng rng(4);
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n));
  for (auto& row : w) {
    for (auto& v : row) v = static_cast<std::int64_t>(rng.uniform_index(100000));
  }
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_assignment(w));
}
BENCHMARK(BM_Hungarian)->Arg(9)->Arg(64)->Arg(256);

void BM_ScoreHour(benchmark::State& state) {
  // One hour of back-to-back segments, 9 speakers.
  CounterRng rng(5);
  std::vector<Segment> ref;
  std::vector<Segment> sys;
  double t = 0.0;
  while (t < 3600.0) {
    const double len = 0.5 + 2.5 * rng.uniform();
    const auto spk = rng.uniform_index(9);
    ref.push_back({t, t + len, "s" + std::to_string(spk)});
    sys.push_back({t, t + len, "c" + std::to_string(rng.uniform() < 0.9 ? spk : rng.uniform_index(9))});
    t += len;
  }
  const auto r = make_timeline(ref);
  const auto s = make_timeline(sys, r.duration);
  for (auto _ : state) benchmark::DoNotOptimize(score_timelines(r, s));
}
BENCHMARK(BM_ScoreHour)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
