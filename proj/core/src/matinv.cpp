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

#include "seclogit/matinv.hpp"

#include <cmath>

#include "seclogit/errors.hpp"
#include "seclogit/primitives.hpp"
#include "seclogit/secure_ops.hpp"

namespace seclogit {

namespace {

// 2 - t, computed locally: party 0 offsets its share by the encoded
// constant, everyone else just negates.
SharedVector two_minus(const SharedVector& t, Engine& eng) {
  SharedVector out = neg_local(t);
  out[0].elems[0] = eng.codec().add(out[0].elems[0], eng.codec().encode(2.0));
  return out;
}

SharedVector replicate(const SharedVector& scalar, size_t len) {
  SharedVector out;
  out.reserve(scalar.size());
  for (const auto& sv : scalar) {
    out.push_back(ShareVector{sv.party_id, sv.codec, sv.scale_bits,
                              std::vector<RingElem>(len, sv.elems[0])});
  }
  return out;
}

SharedVector trace_shares(const SharedMatrix& a, Engine& eng) {
  SharedVector out = zero_shared_vector(eng.codec(), eng.parties(), 1, a[0].scale_bits);
  for (size_t j = 0; j < a.size(); ++j) {
    RingElem s{};
    for (size_t i = 0; i < a[j].rows; ++i) s = eng.codec().add(s, a[j].at(i, i));
    out[j].elems[0] = s;
  }
  return out;
}

double orchestrator_peek(const SharedVector& scalar) {
  // Diagnostic reconstruction for error reports; exchanges no messages.
  return reconstruct_vector(scalar)[0];
}

}  // namespace

int fixed_reciprocal_iterations(const FixedPointCodec& codec) { return codec.frac_bits() + 8; }

namespace {

SharedVector reciprocal_loop(const SharedVector& a, double x0, Engine& eng, int iterations,
                             double stop_eps, bool adaptive, int* performed) {
  const auto& codec = eng.codec();
  if (a[0].size() != 1) throw ValidationError("sec_reciprocal expects a shared scalar");
  if (x0 <= 0) throw ValidationError("initial value must be positive");

  SharedVector x = zero_shared_vector(codec, eng.parties(), 1, codec.frac_bits());
  x[0].elems[0] = codec.encode(x0);

  std::vector<double> residuals;
  for (int s = 1; s <= iterations; ++s) {
    SharedVector t = mul_shares(a, x, eng);  // a * x_s
    if (adaptive) {
      residuals.push_back(orchestrator_peek(t) - 1.0);
      GtOutcome g = interval_check(t, codec.encode(1.0 - stop_eps), Tag::kGtc, eng);
      if (open_gt(g, nullptr, eng)) {
        if (performed) *performed = s - 1;
        return x;
      }
    }
    x = mul_shares(x, two_minus(t, eng), eng);
  }
  if (adaptive) {
    throw NonConvergenceError("sec_reciprocal did not converge", residuals);
  }
  if (performed) *performed = iterations;
  return x;
}

}  // namespace

SharedVector sec_reciprocal(const SharedVector& a, double x0, double eps, Engine& eng,
                            int max_iter) {
  return reciprocal_loop(a, x0, eng, max_iter, eps, /*adaptive=*/true, nullptr);
}

SharedVector sec_reciprocal_fixed(const SharedVector& a, double x0, int iterations, Engine& eng) {
  return reciprocal_loop(a, x0, eng, iterations, 0.0, /*adaptive=*/false, nullptr);
}

InversionResult sec_matrix_inverse(const SharedMatrix& a, double eps, Engine& eng, int max_iter,
                                   const std::string& mark_prefix) {
  const auto& codec = eng.codec();
  const int parties = eng.parties();
  const size_t d = a[0].rows;
  if (a[0].cols != d) throw ValidationError("sec_matrix_inverse expects a square matrix");

  eng.mark(mark_prefix + ".recip");
  SharedVector tr = trace_shares(a, eng);
  const double x0 = std::ldexp(1.0, 1 - codec.frac_bits());
  SharedVector cinv = sec_reciprocal_fixed(tr, x0, fixed_reciprocal_iterations(codec), eng);

  eng.mark(mark_prefix + ".init");
  // M_0 = c^-1 A (d^2 products); X_0 = c^-1 I assembled locally.
  SharedVector a_flat;
  a_flat.reserve(a.size());
  for (const auto& sm : a) {
    a_flat.push_back(ShareVector{sm.party_id, sm.codec, sm.scale_bits, sm.elems});
  }
  SharedMatrix m = as_matrix(mul_shares(replicate(cinv, d * d), a_flat, eng), d, d);
  SharedMatrix x = zero_shared_matrix(codec, parties, d, d, codec.frac_bits());
  for (int j = 0; j < parties; ++j) {
    for (size_t i = 0; i < d; ++i) x[static_cast<size_t>(j)].at(i, i) = cinv[static_cast<size_t>(j)].elems[0];
  }

  const RingElem halt_threshold = codec.encode(static_cast<double>(d) - eps);
  std::vector<double> trace_dev;
  int updates = 0;
  for (int s = 1; s <= max_iter + 1; ++s) {
    eng.mark(mark_prefix + ".it" + std::to_string(s));
    SharedVector trm = trace_shares(m, eng);
    trace_dev.push_back(static_cast<double>(d) - orchestrator_peek(trm));
    GtOutcome g = interval_check(trm, halt_threshold, Tag::kGtc, eng);
    bool scripted_bit = false;
    const bool* scripted = nullptr;
    if (eng.scripted()) {
      scripted_bit = eng.script_inversion_halt();
      scripted = &scripted_bit;
    }
    if (open_gt(g, scripted, eng)) {
      return InversionResult{std::move(x), updates};
    }
    if (s > max_iter) break;
    SharedMatrix xm = matmul(x, m, eng);
    x = sub_local(add_local(x, x), xm);
    SharedMatrix mm = matmul(m, m, eng);
    m = sub_local(add_local(m, m), mm);
    ++updates;
  }
  throw NonConvergenceError("sec_matrix_inverse did not converge (input not SPD?)", trace_dev);
}

}  // namespace seclogit
