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

#ifndef SECLOGIT_PROTOCOL2_HPP
#define SECLOGIT_PROTOCOL2_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "seclogit/data.hpp"
#include "seclogit/engine.hpp"
#include "seclogit/fit.hpp"
#include "seclogit/shares.hpp"

namespace seclogit {

// Sum-and-product-only fitting: instead of evaluating the logistic function
// the protocol tracks approximate sigmoid values sigma_hat, advanced by k
// small linearized steps per round using sigma' = sigma (1 - sigma):
//
//   beta_0 = 0, sigma_hat_0 = 1/2
//   delta_t = 4 (X^T X)^-1 X^T (y - sigma_hat_t)
//   beta_{t+1} = beta_t + delta_t
//   sigma_hat_{t+1} = sigma_hat_t advanced k times by (X delta_t / k) o g
//
// The round body contains no greater-than invocation; comparisons appear
// only in the one-time inversion and the stopping test.

struct Protocol2Config {
  int euler_steps = 10;        // k
  double b_threshold = 1e-4;   // halt when ||X^T(y - sigma_hat)||_2 <= b
  int max_outer = 300;
  uint64_t seed = 1;
  double inv_eps = 1e-3;
  int max_inv = 64;
};

// Conservative step count for a target per-step size tau: ceil(sqrt(n)/tau).
int choose_k(size_t n, double tau);

// Advances sigma_hat by k linearized steps of step/k, each costing one
// product for g(sigma_hat) and one for the scaled step. Transcript rounds
// are labeled `<mark_prefix><m>.g` / `<mark_prefix><m>.s`.
SharedVector gtilde_k(const SharedVector& sigma_hat, const SharedVector& step, int k, Engine& eng,
                      const std::string& mark_prefix = "eu");

// Test-mode observer: called once per round with the reconstructed X*delta
// and updated sigma_hat (orchestrator-side peek, nothing crosses the bus).
using Protocol2Probe =
    std::function<void(int iteration, const Eigen::VectorXd& x_delta, const Eigen::VectorXd& sigma_hat)>;

FitOutput fit_protocol2(const std::vector<PartyInput>& inputs, const Protocol2Config& config,
                        Engine& eng, const TraceFn& trace = {}, const Protocol2Probe& probe = {});

}  // namespace seclogit

#endif  // SECLOGIT_PROTOCOL2_HPP
