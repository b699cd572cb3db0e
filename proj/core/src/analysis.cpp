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

#include "seclogit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seclogit/errors.hpp"

namespace seclogit {

double sigmoid(double a) {
  if (a >= 0) return 1.0 / (1.0 + std::exp(-a));
  const double e = std::exp(a);
  return e / (1.0 + e);
}

double log_likelihood(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      const Eigen::VectorXd& beta) {
  double ll = 0;
  const Eigen::VectorXd eta = x * beta;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double e = eta[i];
    // log(1 + exp(e)) = max(e, 0) + log1p(exp(-|e|))
    ll += y[i] * e - (std::max(e, 0.0) + std::log1p(std::exp(-std::fabs(e))));
  }
  return ll;
}

namespace {

Eigen::VectorXd sigmoid_vec(const Eigen::VectorXd& eta) {
  Eigen::VectorXd s(eta.size());
  for (Eigen::Index i = 0; i < eta.size(); ++i) s[i] = sigmoid(eta[i]);
  return s;
}

Eigen::MatrixXd inverse_spd(const Eigen::MatrixXd& a, const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 1e-12) {
    throw ValidationError(std::string(what) + ": matrix is singular or not positive definite");
  }
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

ClearFit exact_newton_raphson(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double eps,
                              int max_iter) {
  ClearFit fit;
  fit.beta = Eigen::VectorXd::Zero(x.cols());
  for (int t = 1; t <= max_iter; ++t) {
    const Eigen::VectorXd s = sigmoid_vec(x * fit.beta);
    const Eigen::VectorXd grad = x.transpose() * (y - s);
    const Eigen::VectorXd w = s.array() * (1.0 - s.array());
    const Eigen::MatrixXd neg_hess = x.transpose() * w.asDiagonal() * x;
    const Eigen::VectorXd delta = inverse_spd(neg_hess, "exact_newton_raphson") * grad;
    fit.beta += delta;
    fit.iterations = t;
    fit.loglik.push_back(log_likelihood(x, y, fit.beta));
    if (grad.dot(delta) <= eps) return fit;
  }
  throw NonConvergenceError("exact_newton_raphson hit max_iter", fit.loglik);
}

ClearFit hessian_lb_clear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double eps,
                          int max_iter) {
  ClearFit fit;
  fit.beta = Eigen::VectorXd::Zero(x.cols());
  const Eigen::MatrixXd k4 = 4.0 * inverse_spd(x.transpose() * x, "hessian_lb_clear");
  for (int t = 1; t <= max_iter; ++t) {
    const Eigen::VectorXd s = sigmoid_vec(x * fit.beta);
    const Eigen::VectorXd grad = x.transpose() * (y - s);
    const Eigen::VectorXd delta = k4 * grad;
    fit.beta += delta;
    fit.iterations = t;
    fit.loglik.push_back(log_likelihood(x, y, fit.beta));
    if (grad.dot(delta) <= eps) return fit;
  }
  throw NonConvergenceError("hessian_lb_clear hit max_iter", fit.loglik);
}

std::vector<LogisticSampleSet> protocol1_sample_stages(const Protocol1Config& config) {
  Prng rng(Prng::mix(config.seed, 1));  // party 1 draws the samples
  std::vector<int> stages = config.refinement_schedule;
  stages.push_back(config.logistic_samples);
  std::vector<LogisticSampleSet> out;
  out.reserve(stages.size());
  for (int count : stages) out.push_back(draw_logistic_samples(count, rng));
  return out;
}

ClearFit clear_oracle_protocol1(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                const std::vector<LogisticSampleSet>& stages,
                                const Protocol1Config& config, double stop_grad_norm) {
  const bool full_newton = config.hessian_mode == HessianMode::kFullNewton;
  ClearFit fit;
  fit.beta = Eigen::VectorXd::Zero(x.cols());
  Eigen::MatrixXd k4;
  if (!full_newton) k4 = 4.0 * inverse_spd(x.transpose() * x, "clear_oracle_protocol1");
  const Eigen::VectorXd xty = x.transpose() * y;

  int t = 0;
  for (const auto& samples : stages) {
    std::vector<double> z = samples.z;
    std::sort(z.begin(), z.end());
    bool stage_done = false;
    while (!stage_done) {
      if (t == config.max_outer) {
        throw NonConvergenceError("clear_oracle_protocol1 hit max_outer", fit.loglik);
      }
      ++t;
      const Eigen::VectorXd eta = x * fit.beta;
      Eigen::VectorXd s(eta.size());
      for (Eigen::Index i = 0; i < eta.size(); ++i) s[i] = ecdf_value(z, eta[i]);
      const Eigen::VectorXd grad = xty - x.transpose() * s;
      Eigen::VectorXd delta;
      if (full_newton) {
        const Eigen::VectorXd w = s.array() * (1.0 - s.array());
        delta = inverse_spd(x.transpose() * w.asDiagonal() * x, "clear_oracle_protocol1") * grad;
      } else {
        delta = k4 * grad;
      }
      fit.beta += delta;
      fit.iterations = t;
      fit.loglik.push_back(log_likelihood(x, y, fit.beta));
      stage_done = stop_grad_norm > 0 ? grad.norm() <= stop_grad_norm
                                      : grad.dot(delta) <= config.eps_conv;
    }
  }
  return fit;
}

ClearFit clear_oracle_protocol2(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                const Protocol2Config& config) {
  ClearFit fit;
  fit.beta = Eigen::VectorXd::Zero(x.cols());
  const Eigen::MatrixXd k4 = 4.0 * inverse_spd(x.transpose() * x, "clear_oracle_protocol2");
  const Eigen::VectorXd xty = x.transpose() * y;
  Eigen::VectorXd sigma_hat = Eigen::VectorXd::Constant(x.rows(), 0.5);
  const double b2 = config.b_threshold * config.b_threshold;

  for (int t = 1; t <= config.max_outer; ++t) {
    const Eigen::VectorXd residual = xty - x.transpose() * sigma_hat;
    const Eigen::VectorXd delta = k4 * residual;
    fit.beta += delta;
    const Eigen::VectorXd step = (x * delta) / config.euler_steps;
    for (int m = 0; m < config.euler_steps; ++m) {
      sigma_hat += step.cwiseProduct(
          (sigma_hat.array() * (1.0 - sigma_hat.array())).matrix());
    }
    fit.iterations = t;
    fit.loglik.push_back(log_likelihood(x, y, fit.beta));
    if (residual.squaredNorm() <= b2) return fit;
  }
  throw NonConvergenceError("clear_oracle_protocol2 hit max_outer", fit.loglik);
}

size_t dkw_sample_size(double eps, double alpha) {
  if (!(eps > 0 && eps < 1)) throw ValidationError("eps must lie in (0, 1)");
  if (!(alpha > 0 && alpha < 2)) throw ValidationError("alpha must lie in (0, 2)");
  return static_cast<size_t>(std::ceil(-0.5 * std::log(alpha / 2.0) / (eps * eps)));
}

double param_error_bound(double radius, double logistic_samples, double sup_err,
                         double lambda_min_hat) {
  if (radius <= 0 || logistic_samples <= 0 || sup_err < 0) {
    throw ValidationError("bound inputs must be positive");
  }
  if (lambda_min_hat <= 0) throw ValidationError("lambda_min_hat must be positive");
  return radius * (1.0 / logistic_samples + sup_err) / lambda_min_hat;
}

double euler_error_bound(double tau) {
  if (!(tau > 0 && tau < 1)) throw ValidationError("tau must lie in (0, 1)");
  const double s_star = (6.0 + std::sqrt(12.0)) / 12.0;
  const double spp_star = s_star * (1.0 - s_star) * (1.0 - 2.0 * s_star);  // negative
  return 0.5 * tau * (0.25 - 2.0 * tau * spp_star);
}

double data_radius(const Eigen::MatrixXd& x) { return x.rowwise().norm().maxCoeff(); }

double fisher_lambda_min(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         const Eigen::VectorXd& beta) {
  (void)y;
  const Eigen::VectorXd s = sigmoid_vec(x * beta);
  const Eigen::VectorXd w = s.array() * (1.0 - s.array());
  const Eigen::MatrixXd info =
      (x.transpose() * w.asDiagonal() * x) / static_cast<double>(x.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(info);
  return es.eigenvalues().minCoeff();
}

double ecdf_value(const std::vector<double>& z_sorted, double a) {
  const auto it = std::upper_bound(z_sorted.begin(), z_sorted.end(), a);
  return static_cast<double>(it - z_sorted.begin()) / static_cast<double>(z_sorted.size());
}

double ecdf_sup_error_grid(const std::vector<double>& z_sorted, size_t grid_points) {
  double sup = 0;
  for (size_t g = 0; g < grid_points; ++g) {
    const double a = -10.0 + 20.0 * static_cast<double>(g) / static_cast<double>(grid_points - 1);
    sup = std::max(sup, std::fabs(ecdf_value(z_sorted, a) - sigmoid(a)));
  }
  return sup;
}

double ecdf_sup_error_exact(const std::vector<double>& z_sorted) {
  const double n = static_cast<double>(z_sorted.size());
  double sup = 0;
  for (size_t j = 0; j < z_sorted.size(); ++j) {
    const double s = sigmoid(z_sorted[j]);
    sup = std::max(sup, std::fabs(static_cast<double>(j + 1) / n - s));
    sup = std::max(sup, std::fabs(static_cast<double>(j) / n - s));
  }
  return sup;
}

std::string BoundReport::to_kv() const {
  std::ostringstream os;
  os.precision(17);
  os << "R = " << radius << "\n";
  os << "lambda_min_hat = " << lambda_min_hat << "\n";
  os << "dkw_eps = " << dkw_eps << "\n";
  os << "L = " << logistic_samples << "\n";
  os << "alpha = " << alpha << "\n";
  os << "tau = " << tau << "\n";
  os << "k = " << euler_steps << "\n";
  os << "bound_value = " << bound_value << "\n";
  return os.str();
}

void synthetic_logistic(size_t n, size_t d, const Eigen::VectorXd& beta_star, uint64_t seed,
                        Eigen::MatrixXd* x, Eigen::VectorXd* y) {
  if (static_cast<size_t>(beta_star.size()) != d) {
    throw ValidationError("beta_star dimension mismatch");
  }
  Prng rng(seed);
  x->resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  y->resize(static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i) {
    (*x)(static_cast<Eigen::Index>(i), 0) = 1.0;
    for (size_t c = 1; c < d; ++c) {
      (*x)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = 4.0 * rng.unit() - 2.0;
    }
    const double p = sigmoid(x->row(static_cast<Eigen::Index>(i)).dot(beta_star));
    (*y)[static_cast<Eigen::Index>(i)] = rng.unit() < p ? 1.0 : 0.0;
  }
}

}  // namespace seclogit
