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

#include "seclogit/protocol2.hpp"

#include <cmath>
#include <string>

#include "fit_internal.hpp"
#include "seclogit/analysis.hpp"
#include "seclogit/matinv.hpp"
#include "seclogit/primitives.hpp"
#include "seclogit/secure_ops.hpp"

namespace seclogit {

using internal::one_minus;
using internal::xt_times;

int choose_k(size_t n, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ValidationError("tau must lie in (0, 1)");
  if (n < 1) throw ValidationError("case count must be >= 1");
  return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)) / tau));
}

SharedVector gtilde_k(const SharedVector& sigma_hat, const SharedVector& step, int k, Engine& eng,
                      const std::string& mark_prefix) {
  if (k < 1) throw ValidationError("euler step count must be >= 1");

  eng.mark(mark_prefix + ".kstep");
  SharedVector scaled = const_mul(step, 1.0 / static_cast<double>(k), eng);

  SharedVector s = sigma_hat;
  for (int m = 1; m <= k; ++m) {
    eng.mark(mark_prefix + ".gev" + std::to_string(m));
    SharedVector g = mul_shares(s, one_minus(s), eng);
    eng.mark(mark_prefix + ".sc" + std::to_string(m));
    SharedVector update = mul_shares(scaled, g, eng);
    s = add_local(s, update);
  }
  return s;
}

FitOutput fit_protocol2(const std::vector<PartyInput>& inputs, const Protocol2Config& config,
                        Engine& eng, const TraceFn& trace, const Protocol2Probe& probe) {
  const auto& codec = eng.codec();
  if (config.euler_steps < 1) throw ValidationError("euler_steps must be >= 1");
  const auto k_cap = 1 << (codec.frac_bits() / 2);
  if (config.euler_steps > k_cap) {
    throw ValidationError("euler_steps exceeds representable cap " + std::to_string(k_cap));
  }
  if (config.b_threshold <= 0) throw ValidationError("b_threshold must be positive");
  if (config.max_outer < 1) throw ValidationError("max_outer must be >= 1");

  internal::SharedDesign design = internal::encode_inputs(inputs, eng);
  const size_t n = design.n, d = design.d;

  Eigen::MatrixXd x_clear = inputs[0].X_j;
  Eigen::VectorXd y_clear = inputs[0].y_j;
  for (size_t j = 1; j < inputs.size(); ++j) {
    x_clear += inputs[j].X_j;
    y_clear += inputs[j].y_j;
  }

  eng.mark("setup.xty");
  SharedVector xty = xt_times(design.x, design.y, eng);
  eng.mark("setup.xx");
  SharedMatrix xtx = internal::xtx_shares(design.x, eng, false, nullptr);
  auto [kinv, inversion_iterations] = internal::invert_scaled(
      xtx, static_cast<double>(n), config.inv_eps, config.max_inv, eng, "setup.inv");
  SharedMatrix k4 = const_mul_raw(kinv, RingElem{4}, 0);

  SharedVector beta = zero_shared_vector(codec, eng.parties(), d, codec.frac_bits());
  SharedVector sigma_hat =
      held_vector(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 0.5), codec,
                  eng.parties(), 0);

  const double b2 = config.b_threshold * config.b_threshold;
  std::vector<double> loglik_diag;
  for (int t = 1; t <= config.max_outer; ++t) {
    const std::string o = "o" + std::to_string(t);

    eng.mark(o + ".delta");
    SharedVector residual = sub_local(xty, xt_times(design.x, sigma_hat, eng));
    SharedVector delta = matvec(k4, residual, eng);
    beta = add_local(beta, delta);

    eng.mark(o + ".xd");
    SharedVector x_delta = matvec(design.x, delta, eng);
    sigma_hat = gtilde_k(sigma_hat, x_delta, config.euler_steps, eng, o);

    if (probe) {
      probe(t, reconstruct_vector(x_delta), reconstruct_vector(sigma_hat));
    }

    eng.mark(o + ".stop");
    SharedVector ssq = inner_product(residual, residual, eng);
    const bool keep_going = internal::reveal_strictly_greater(ssq, b2, eng);

    loglik_diag.push_back(log_likelihood(x_clear, y_clear, reconstruct_vector(beta)));
    if (trace) {
      eng.mark(o + ".trace");
      trace(t, open_vector(beta, eng));
    }
    if (!keep_going) {
      eng.mark("final");
      Eigen::VectorXd beta_clear = open_vector(beta, eng);
      return FitOutput{std::move(beta_clear), t, inversion_iterations};
    }
  }
  throw NonConvergenceError("fit_protocol2 hit max_outer=" + std::to_string(config.max_outer),
                            loglik_diag);
}

}  // namespace seclogit
