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

#ifndef SECLOGIT_PROTOCOL1_HPP
#define SECLOGIT_PROTOCOL1_HPP

#include <cstdint>
#include <vector>

#include "seclogit/data.hpp"
#include "seclogit/engine.hpp"
#include "seclogit/fit.hpp"
#include "seclogit/shares.hpp"

namespace seclogit {

// Logistic regression over additively shared data where the sigmoid is
// replaced by the empirical CDF of L pre-drawn logistic samples,
//
//   F_L(a) = L^-1 sum_l 1{a >= z_l},
//
// each indicator evaluated through the greater-than functionality so no
// party sees the inner products.

// The L logistic draws, frozen for a whole fit. Held by party 1's side of
// the comparisons.
struct LogisticSampleSet {
  std::vector<double> z;
};

LogisticSampleSet draw_logistic_samples(int count, Prng& rng);

enum class HessianMode {
  kHessianLb,   // one inversion of X^T X, update beta += 4 (X^T X)^-1 grad
  kFullNewton,  // invert the per-round Hessian
};

struct Protocol1Config {
  int logistic_samples = 200;  // L
  double eps_conv = 1e-8;      // halt when lambda^2 = grad . delta <= eps
  HessianMode hessian_mode = HessianMode::kHessianLb;
  int max_outer = 100;
  uint64_t seed = 1;
  double inv_eps = 1e-3;  // trace-test threshold inside the inversion
  int max_inv = 64;
  // Optional coarse-to-fine schedule: run to convergence at each listed L
  // (resampling the logistic draws), finishing with logistic_samples.
  std::vector<int> refinement_schedule;
};

// Shares of F_L evaluated at each entry of `inner` (shares of beta^T x_i).
// Costs L greater-than evaluations plus L xor-conversion products per case;
// the indicator count is exact in fixed point, so the reconstruction equals
// the clear ECDF up to the public quantization of 1/L.
SharedVector ecdf_sigmoid_shares(const SharedVector& inner, const LogisticSampleSet& samples,
                                 Engine& eng);

// Shares of sum_i { x_i y_i - x_i sigma_i }.
SharedVector gradient_shares(const SharedMatrix& x, const SharedVector& y,
                             const SharedVector& sigma, Engine& eng);

// Shares of the negated Hessian sum_i sigma_i (1 - sigma_i) x_i x_i^T.
SharedMatrix hessian_shares(const SharedMatrix& x, const SharedVector& sigma, Engine& eng);

// Evaluates lambda^2 = grad . delta and reveals 1{lambda^2 > eps} to all
// parties. Returns true when the protocol should halt (lambda^2 <= eps,
// boundary inclusive).
bool convergence_check(const SharedVector& grad, const SharedVector& delta, double eps,
                       Engine& eng);

FitOutput fit_protocol1(const std::vector<PartyInput>& inputs, const Protocol1Config& config,
                        Engine& eng, const TraceFn& trace = {});

}  // namespace seclogit

#endif  // SECLOGIT_PROTOCOL1_HPP
