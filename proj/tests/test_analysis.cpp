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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "seclogit/analysis.hpp"
#include "test_util.hpp"

using namespace seclogit;
using seclogit::testutil::vec;

TEST_CASE("log likelihood") {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic_logistic(50, 3, vec({0.5, 1.0, -1.0}), 42, &x, &y);

  SUBCASE("at the origin it is -n log 2") {
    CHECK(log_likelihood(x, y, Eigen::VectorXd::Zero(3)) ==
          doctest::Approx(-50.0 * std::log(2.0)).epsilon(1e-12));
  }
  SUBCASE("a perfectly separated positive case saturates to zero from below") {
    Eigen::MatrixXd one(1, 1);
    one << 1.0;
    Eigen::VectorXd y1 = vec({1});
    // 30 keeps log1p(exp(-eta)) representable next to eta in a double.
    const double ll = log_likelihood(one, y1, vec({30.0}));
    CHECK(ll < 0.0);
    CHECK(ll > -1e-12);
  }
  SUBCASE("matches the naive formula on moderate linear predictors") {
    for (int i = 0; i < 200; ++i) {
      Prng rng(static_cast<uint64_t>(i));
      Eigen::MatrixXd x1(1, 1);
      x1 << (rng.unit() - 0.5) * 10.0;  // |x beta| <= 5
      Eigen::VectorXd y1 = vec({rng.bit() ? 1.0 : 0.0});
      const Eigen::VectorXd b = vec({1.0});
      const double naive = y1[0] * x1(0, 0) - std::log(1.0 + std::exp(x1(0, 0)));
      CHECK(std::fabs(log_likelihood(x1, y1, b) - naive) <= 1e-12);
    }
  }
}

TEST_CASE("exact Newton-Raphson") {
  SUBCASE("intercept-only model with balanced responses lands at zero") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Ones(10, 1);
    Eigen::VectorXd y(10);
    for (int i = 0; i < 10; ++i) y[i] = i < 5 ? 1.0 : 0.0;
    const ClearFit fit = exact_newton_raphson(x, y);
    CHECK(std::fabs(fit.beta[0]) <= 1e-9);
  }
  SUBCASE("recovers synthetic parameters and zeroes the gradient") {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
    synthetic_logistic(500, 2, vec({1.0, -1.0}), 7, &x, &y);
    const ClearFit fit = exact_newton_raphson(x, y);
    CHECK((fit.beta - vec({1.0, -1.0})).norm() <= 0.5);  // sampling error scale

    Eigen::VectorXd s(500);
    for (int i = 0; i < 500; ++i) s[i] = sigmoid(x.row(i).dot(fit.beta));
    CHECK((x.transpose() * (y - s)).norm() <= 1e-6);
  }
  SUBCASE("likelihood is non-decreasing near the optimum") {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
    synthetic_logistic(300, 3, vec({0.5, 1.0, -0.5}), 8, &x, &y);
    const ClearFit fit = exact_newton_raphson(x, y);
    for (size_t i = 1; i < fit.loglik.size(); ++i) {
      CHECK(fit.loglik[i] >= fit.loglik[i - 1] - 1e-9);
    }
  }
}

TEST_CASE("hessian lower-bound baseline") {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic_logistic(250, 3, vec({0.4, 0.9, -0.9}), 9, &x, &y);
  const ClearFit nr = exact_newton_raphson(x, y, 1e-12);
  const ClearFit lb = hessian_lb_clear(x, y, 1e-12);

  CHECK((nr.beta - lb.beta).norm() <= 1e-6);
  CHECK(lb.iterations >= nr.iterations);
  for (size_t i = 1; i < lb.loglik.size(); ++i) {
    CHECK(lb.loglik[i] >= lb.loglik[i - 1] - 1e-12);
  }
}

TEST_CASE("dkw sample size") {
  CHECK(dkw_sample_size(0.05, 0.05) == 738);
  CHECK(dkw_sample_size(0.1, 0.05) == 185);
  // As alpha approaches 2 the bound degenerates to zero samples.
  CHECK(dkw_sample_size(0.1, 1.99) <= 1);
  CHECK_THROWS_AS(dkw_sample_size(0.0, 0.05), ValidationError);
  CHECK_THROWS_AS(dkw_sample_size(0.05, 2.0), ValidationError);
}

TEST_CASE("parameter error bound arithmetic") {
  CHECK(param_error_bound(1.0, 100.0, 0.05, 0.1) == doctest::Approx(0.6).epsilon(1e-12));
  // Vanishes as L grows with no ECDF error.
  CHECK(param_error_bound(1.0, 1e12, 0.0, 0.1) <= 1e-11);
  CHECK_THROWS_AS(param_error_bound(1.0, 100.0, 0.05, 0.0), ValidationError);
}

TEST_CASE("euler error bound") {
  SUBCASE("slope an eighth at the origin") {
    CHECK(euler_error_bound(1e-6) / 1e-6 == doctest::Approx(0.125).epsilon(1e-3));
  }
  SUBCASE("printed value at a tenth") {
    CHECK(euler_error_bound(0.1) == doctest::Approx(0.0134623).epsilon(1e-4));
  }
  SUBCASE("dominates a measured forward integration") {
    // Integrate s' = s(1-s) from 0 to 10 with fixed step tau and compare to
    // the exact sigmoid at each grid point.
    for (double tau : {0.05, 0.1, 0.2}) {
      double s = 0.5;
      double a = 0.0;
      double worst = 0.0;
      while (a < 10.0) {
        s += tau * s * (1.0 - s);
        a += tau;
        worst = std::max(worst, std::fabs(s - sigmoid(a)));
      }
      CHECK(worst <= euler_error_bound(tau));
    }
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(euler_error_bound(0.0), ValidationError);
    CHECK_THROWS_AS(euler_error_bound(1.0), ValidationError);
  }
}

TEST_CASE("distance-from-optimum bound via the smallest curvature") {
  // Stop the slow baseline early at several thresholds; the distance to the
  // true optimizer is at most the gradient norm over the smallest negative-
  // Hessian eigenvalue (evaluated at the optimum, halved for segment slack).
  for (int inst = 0; inst < 20; ++inst) {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
    synthetic_logistic(150, 3, vec({0.3, 0.8, -0.6}), 100 + static_cast<uint64_t>(inst), &x, &y);
    const ClearFit opt = exact_newton_raphson(x, y, 1e-14);
    const ClearFit rough = hessian_lb_clear(x, y, 1e-4, 5000);

    Eigen::VectorXd s(x.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) s[i] = sigmoid(x.row(i).dot(rough.beta));
    const double grad_norm = (x.transpose() * (y - s)).norm();
    const double lam = static_cast<double>(x.rows()) * fisher_lambda_min(x, y, opt.beta);
    CHECK((rough.beta - opt.beta).norm() <= grad_norm / (0.5 * lam));
  }
}

TEST_CASE("oracle run to the coarse gradient threshold terminates") {
  // Stopping at ||grad~|| <= n R / L is always reachable.
  for (int inst = 0; inst < 5; ++inst) {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
    synthetic_logistic(120, 3, vec({0.4, 0.7, -0.7}), 200 + static_cast<uint64_t>(inst), &x, &y);
    Protocol1Config cfg;
    cfg.logistic_samples = 100;
    cfg.eps_conv = 1e-3;
    cfg.seed = static_cast<uint64_t>(inst);
    cfg.max_outer = 5000;
    const double threshold = 120.0 * data_radius(x) / cfg.logistic_samples;
    const ClearFit fit =
        clear_oracle_protocol1(x, y, protocol1_sample_stages(cfg), cfg, threshold);
    CHECK(fit.iterations < cfg.max_outer);
  }
}

TEST_CASE("protocol-1 oracle approaches the exact-sigmoid baseline as L grows") {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic_logistic(150, 3, vec({0.5, 0.8, -0.8}), 11, &x, &y);
  Protocol1Config cfg;
  cfg.logistic_samples = 100000;
  cfg.eps_conv = 1e-6;
  cfg.seed = 3;
  cfg.max_outer = 5000;
  const ClearFit oracle = clear_oracle_protocol1(x, y, protocol1_sample_stages(cfg), cfg);
  const ClearFit lb = hessian_lb_clear(x, y, 1e-10);
  CHECK((oracle.beta - lb.beta).cwiseAbs().maxCoeff() <= 1e-2);

  // Deterministic under a fixed seed.
  const ClearFit again = clear_oracle_protocol1(x, y, protocol1_sample_stages(cfg), cfg);
  CHECK(oracle.beta == again.beta);
}

TEST_CASE("protocol-2 oracle at large k matches the exact-sigmoid baseline") {
  // The terminal gap scales with the largest integration step, i.e. with
  // the first-round update; mild parameters keep it inside 1e-3 at k = 50.
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  synthetic_logistic(150, 3, vec({0.1, 0.2, -0.2}), 12, &x, &y);
  Protocol2Config cfg;
  cfg.euler_steps = 50;
  cfg.b_threshold = 1e-4;
  const ClearFit oracle = clear_oracle_protocol2(x, y, cfg);
  const ClearFit lb = hessian_lb_clear(x, y, 1e-10);
  CHECK((oracle.beta - lb.beta).cwiseAbs().maxCoeff() <= 1e-3);
  const double ll_gap = std::fabs(log_likelihood(x, y, oracle.beta) - lb.loglik.back());
  CHECK(ll_gap / std::fabs(lb.loglik.back()) <= 1e-3);

  const ClearFit again = clear_oracle_protocol2(x, y, cfg);
  CHECK(oracle.beta == again.beta);
}

TEST_CASE("ecdf sup-error measures agree") {
  Prng rng(13);
  auto z = draw_logistic_samples(500, rng).z;
  std::sort(z.begin(), z.end());
  const double grid = ecdf_sup_error_grid(z, 100000);
  const double exact = ecdf_sup_error_exact(z);
  CHECK(grid <= exact + 1e-12);
  CHECK(exact - grid <= 2e-3);  // grid spacing effect
}

TEST_CASE("bound report serializes as key=value text") {
  BoundReport r;
  r.radius = 2.0;
  r.bound_value = 0.5;
  const std::string kv = r.to_kv();
  CHECK(kv.find("R = 2") != std::string::npos);
  CHECK(kv.find("bound_value = 0.5") != std::string::npos);
}
