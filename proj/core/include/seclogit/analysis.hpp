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

#ifndef SECLOGIT_ANALYSIS_HPP
#define SECLOGIT_ANALYSIS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "seclogit/protocol1.hpp"
#include "seclogit/protocol2.hpp"

namespace seclogit {

// Clear-float baselines and shadow oracles. The shadows replay the exact
// round structure of the secure protocols in doubles, so a secure run and
// its shadow differ only by fixed-point effects.

double sigmoid(double a);

// sum_i { y_i x_i^T b - log(1 + exp(x_i^T b)) }, overflow-safe.
double log_likelihood(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      const Eigen::VectorXd& beta);

struct ClearFit {
  Eigen::VectorXd beta;
  std::vector<double> loglik;  // one entry per outer round, after the update
  int iterations = 0;
};

// Newton-Raphson with exact sigmoids; halts when lambda^2 = grad . delta
// falls to eps or below.
ClearFit exact_newton_raphson(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                              double eps = 1e-8, int max_iter = 200);

// Fixed-curvature updates beta += 4 (X^T X)^-1 grad with exact sigmoids.
// Converges to the same optimum as Newton-Raphson, more slowly, with a
// monotone likelihood trace.
ClearFit hessian_lb_clear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double eps = 1e-8,
                          int max_iter = 5000);

// The logistic sample stages a protocol-1 run with this config will use
// (derived from the config seed exactly as the protocol derives them).
std::vector<LogisticSampleSet> protocol1_sample_stages(const Protocol1Config& config);

// Float shadow of fit_protocol1 on the same frozen samples. When
// stop_grad_norm > 0 the run instead halts once ||grad~||_2 falls to it.
ClearFit clear_oracle_protocol1(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                const std::vector<LogisticSampleSet>& stages,
                                const Protocol1Config& config, double stop_grad_norm = 0.0);

// Float shadow of fit_protocol2.
ClearFit clear_oracle_protocol2(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                const Protocol2Config& config);

// Smallest sample count L with 2 exp(-2 L eps^2) <= alpha.
size_t dkw_sample_size(double eps, double alpha);

// R (1/L + sup_err) / lambda_min_hat.
double param_error_bound(double radius, double logistic_samples, double sup_err,
                         double lambda_min_hat);

// tau/2 * (1/4 - 2 tau s''(a*)) at the stationary point of the sigmoid's
// second derivative, s(a*) = (6 + sqrt(12)) / 12.
double euler_error_bound(double tau);

// max_i ||x_i||_2.
double data_radius(const Eigen::MatrixXd& x);

// Smallest eigenvalue of the Fisher information  -(1/n) d2l evaluated at beta.
double fisher_lambda_min(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         const Eigen::VectorXd& beta);

// Empirical-CDF value of the sorted sample set at a.
double ecdf_value(const std::vector<double>& z_sorted, double a);

// sup |F_L - sigmoid| on a uniform grid of `grid_points` over [-10, 10].
double ecdf_sup_error_grid(const std::vector<double>& z_sorted, size_t grid_points = 100000);

// Exact sup |F_L - sigmoid| via the jump points of F_L.
double ecdf_sup_error_exact(const std::vector<double>& z_sorted);

// Inputs and result of one error-bound evaluation, serializable as a flat
// key=value block.
struct BoundReport {
  double radius = 0;           // R
  double lambda_min_hat = 0;   // smallest Fisher eigenvalue
  double dkw_eps = 0;
  double logistic_samples = 0;  // L
  double alpha = 0;
  double tau = 0;
  double euler_steps = 0;  // k
  double bound_value = 0;

  std::string to_kv() const;
};

// Synthetic logistic data: intercept column plus uniform(-2, 2) features,
// responses drawn from the model at beta_star.
void synthetic_logistic(size_t n, size_t d, const Eigen::VectorXd& beta_star, uint64_t seed,
                        Eigen::MatrixXd* x, Eigen::VectorXd* y);

}  // namespace seclogit

#endif  // SECLOGIT_ANALYSIS_HPP
