// Copyright 2026 The seclogit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "seclogit/analysis.hpp"
#include "seclogit/matinv.hpp"
#include "seclogit/protocol1.hpp"
#include "seclogit/protocol2.hpp"

namespace {

using namespace seclogit;

std::vector<PartyInput> bench_inputs(size_t n, size_t d) {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  Eigen::VectorXd beta_star = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(d), 0.4);
  beta_star[0] = 0.2;
  synthetic_logistic(n, d, beta_star, 7, &x, &y);
  Dataset ds;
  ds.X = x;
  ds.y = y;
  for (size_t c = 0; c < d; ++c) ds.column_names.push_back("c" + std::to_string(c));
  Prng rng(8);
  return partition(ds, PartitionScheme::kHorizontal, 2, rng);
}

void BM_Protocol1Fit(benchmark::State& state) {
  const auto inputs = bench_inputs(static_cast<size_t>(state.range(0)), 3);
  Protocol1Config cfg;
  cfg.logistic_samples = static_cast<int>(state.range(1));
  cfg.eps_conv = 1e-2;
  cfg.max_outer = 200;
  for (auto _ : state) {
    Engine eng(FixedPointCodec{}, 2, 1);
    eng.transcript().set_recording(false);
    benchmark::DoNotOptimize(fit_protocol1(inputs, cfg, eng));
  }
}
BENCHMARK(BM_Protocol1Fit)->Args({100, 50})->Args({200, 100})->Unit(benchmark::kMillisecond);

void BM_Protocol2Fit(benchmark::State& state) {
  const auto inputs = bench_inputs(static_cast<size_t>(state.range(0)), 3);
  Protocol2Config cfg;
  cfg.euler_steps = static_cast<int>(state.range(1));
  cfg.b_threshold = 1e-3;
  for (auto _ : state) {
    Engine eng(FixedPointCodec{}, 2, 1);
    eng.transcript().set_recording(false);
    benchmark::DoNotOptimize(fit_protocol2(inputs, cfg, eng));
  }
}
BENCHMARK(BM_Protocol2Fit)->Args({200, 10})->Args({200, 50})->Unit(benchmark::kMillisecond);

void BM_MatrixInverse(benchmark::State& state) {
  const auto d = state.range(0);
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d) * 2.0;
  for (Eigen::Index i = 0; i + 1 < d; ++i) a(i, i + 1) = a(i + 1, i) = 0.3;
  Prng rng(9);
  for (auto _ : state) {
    Engine eng(FixedPointCodec{}, 2, 2);
    eng.transcript().set_recording(false);
    Prng srng(10);
    benchmark::DoNotOptimize(
        sec_matrix_inverse(split_matrix(a, eng.codec(), 2, srng), 1e-3, eng));
  }
}
BENCHMARK(BM_MatrixInverse)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
