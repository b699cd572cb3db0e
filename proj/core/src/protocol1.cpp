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

#include "seclogit/protocol1.hpp"

#include <string>

#include "fit_internal.hpp"
#include "seclogit/analysis.hpp"
#include "seclogit/matinv.hpp"
#include "seclogit/primitives.hpp"
#include "seclogit/secure_ops.hpp"

namespace seclogit {

using internal::one_minus;
using internal::xt_times;

LogisticSampleSet draw_logistic_samples(int count, Prng& rng) {
  if (count < 1) throw ValidationError("sample count must be >= 1");
  LogisticSampleSet out;
  out.z.reserve(static_cast<size_t>(count));
  for (int l = 0; l < count; ++l) out.z.push_back(rng.logistic());
  return out;
}

SharedVector ecdf_sigmoid_shares(const SharedVector& inner, const LogisticSampleSet& samples,
                                 Engine& eng) {
  const auto& codec = eng.codec();
  const size_t n = inner[0].size();
  const size_t len = samples.z.size();
  if (len == 0) throw ValidationError("empty logistic sample set");

  // Public quantized 1/L; multiplying the integer indicator count by it is
  // a local scale-0 x scale-f product, no truncation involved.
  const RingElem q = codec.encode(1.0 / static_cast<double>(len));

  SharedVector sigma = zero_shared_vector(codec, eng.parties(), n, codec.frac_bits());
  std::vector<uint8_t> bits_a(len), bits_b(len);
  for (size_t i = 0; i < n; ++i) {
    // Fold parties >= 2 onto party 1's comparison side once per case.
    const RingElem side = fold_side(element_of(inner, i), 1, eng)[0];
    const RingElem u = inner[0].elems[i];
    for (size_t l = 0; l < len; ++l) {
      const RingElem v = codec.sub(codec.encode(samples.z[l]), side);
      const GtOutcome g = gt_xor(0, u, 1, v, Tag::kGt, eng);
      bits_a[l] = g.bit_a ? 1 : 0;
      bits_b[l] = g.bit_b ? 1 : 0;
    }
    SharedVector count = xor_to_additive(bits_a, bits_b, eng);
    for (size_t j = 0; j < sigma.size(); ++j) {
      sigma[j].elems[i] = codec.mul(count[j].elems[0], q);
    }
  }
  return sigma;
}

SharedVector gradient_shares(const SharedMatrix& x, const SharedVector& y,
                             const SharedVector& sigma, Engine& eng) {
  return sub_local(xt_times(x, y, eng), xt_times(x, sigma, eng));
}

namespace {

// sum_i w_i * O_i for per-case outer products O_i = x_i x_i^T.
SharedMatrix weighted_outer_sum(const std::vector<SharedMatrix>& cases, const SharedVector& w,
                                Engine& eng) {
  const auto& codec = eng.codec();
  const size_t d = cases[0][0].rows;
  SharedMatrix h = zero_shared_matrix(codec, eng.parties(), d, d, codec.frac_bits());
  for (size_t i = 0; i < cases.size(); ++i) {
    SharedVector wi;
    wi.reserve(w.size());
    for (const auto& sv : w) {
      wi.push_back(ShareVector{sv.party_id, sv.codec, sv.scale_bits,
                               std::vector<RingElem>(d * d, sv.elems[i])});
    }
    SharedVector oi;
    oi.reserve(cases[i].size());
    for (const auto& sm : cases[i]) {
      oi.push_back(ShareVector{sm.party_id, sm.codec, sm.scale_bits, sm.elems});
    }
    h = add_local(h, as_matrix(mul_shares(wi, oi, eng), d, d));
  }
  return h;
}

}  // namespace

SharedMatrix hessian_shares(const SharedMatrix& x, const SharedVector& sigma, Engine& eng) {
  const size_t n = x[0].rows;
  SharedVector w = mul_shares(sigma, one_minus(sigma), eng);
  std::vector<SharedMatrix> cases;
  cases.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    SharedVector xi = row_of(x, i);
    cases.push_back(outer_product(xi, xi, eng));
  }
  return weighted_outer_sum(cases, w, eng);
}

bool convergence_check(const SharedVector& grad, const SharedVector& delta, double eps,
                       Engine& eng) {
  SharedVector lambda2 = inner_product(grad, delta, eng);
  return !internal::reveal_strictly_greater(lambda2, eps, eng);
}

FitOutput fit_protocol1(const std::vector<PartyInput>& inputs, const Protocol1Config& config,
                        Engine& eng, const TraceFn& trace) {
  if (config.logistic_samples < 1) throw ValidationError("logistic_samples must be >= 1");
  if (config.eps_conv <= 0) throw ValidationError("eps_conv must be positive");
  if (config.max_outer < 1) throw ValidationError("max_outer must be >= 1");

  internal::SharedDesign design = internal::encode_inputs(inputs, eng);
  const size_t n = design.n, d = design.d;
  const auto& codec = eng.codec();
  const bool full_newton = config.hessian_mode == HessianMode::kFullNewton;

  // Clear sums kept orchestrator-side for failure diagnostics only.
  Eigen::MatrixXd x_clear = inputs[0].X_j;
  Eigen::VectorXd y_clear = inputs[0].y_j;
  for (size_t j = 1; j < inputs.size(); ++j) {
    x_clear += inputs[j].X_j;
    y_clear += inputs[j].y_j;
  }

  // All stage sample sets are drawn ahead of time and frozen, before any
  // other use of party 1's randomness (the shadow oracle re-derives them
  // from the seed alone).
  std::vector<int> stages = config.refinement_schedule;
  stages.push_back(config.logistic_samples);
  std::vector<LogisticSampleSet> stage_samples;
  stage_samples.reserve(stages.size());
  for (int count : stages) stage_samples.push_back(draw_logistic_samples(count, eng.party_rng(1)));

  eng.mark("setup.xty");
  SharedVector xty = xt_times(design.x, design.y, eng);
  eng.mark("setup.xx");
  std::vector<SharedMatrix> cases;
  SharedMatrix xtx = internal::xtx_shares(design.x, eng, full_newton, &cases);

  int inversion_iterations = 0;
  SharedMatrix k4;
  if (!full_newton) {
    auto [kinv, iters] = internal::invert_scaled(xtx, static_cast<double>(n), config.inv_eps,
                                                 config.max_inv, eng, "setup.inv");
    inversion_iterations = iters;
    k4 = const_mul_raw(kinv, RingElem{4}, 0);  // exact, stays at scale f
  }

  SharedVector beta = zero_shared_vector(codec, eng.parties(), d, codec.frac_bits());
  std::vector<double> loglik_diag;
  int t = 0;
  for (size_t stage = 0; stage < stage_samples.size(); ++stage) {
    const LogisticSampleSet& samples = stage_samples[stage];
    bool stage_done = false;
    while (!stage_done) {
      if (t == config.max_outer) {
        throw NonConvergenceError("fit_protocol1 hit max_outer=" + std::to_string(config.max_outer),
                                  loglik_diag);
      }
      ++t;
      const std::string o = "o" + std::to_string(t);

      eng.mark(o + ".xb");
      SharedVector inner = matvec(design.x, beta, eng);
      eng.mark(o + ".sig");
      SharedVector sigma = ecdf_sigmoid_shares(inner, samples, eng);

      eng.mark(o + ".gh");
      SharedVector grad = sub_local(xty, xt_times(design.x, sigma, eng));
      SharedMatrix kmat;
      if (full_newton) {
        SharedVector w = mul_shares(sigma, one_minus(sigma), eng);
        SharedMatrix hess = weighted_outer_sum(cases, w, eng);
        auto [kinv, iters] = internal::invert_scaled(hess, static_cast<double>(n), config.inv_eps,
                                                     config.max_inv, eng, o + ".inv");
        inversion_iterations += iters;
        kmat = std::move(kinv);
      } else {
        kmat = k4;
      }

      eng.mark(o + ".up");
      SharedVector delta = matvec(kmat, grad, eng);
      beta = add_local(beta, delta);

      eng.mark(o + ".cv");
      stage_done = convergence_check(grad, delta, config.eps_conv, eng);

      loglik_diag.push_back(log_likelihood(x_clear, y_clear, reconstruct_vector(beta)));
      if (trace) {
        eng.mark(o + ".trace");
        trace(t, open_vector(beta, eng));
      }
    }
  }

  eng.mark("final");
  Eigen::VectorXd beta_clear = open_vector(beta, eng);
  return FitOutput{std::move(beta_clear), t, inversion_iterations};
}

}  // namespace seclogit
