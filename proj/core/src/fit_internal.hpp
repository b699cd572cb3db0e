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

#ifndef SECLOGIT_SRC_FIT_INTERNAL_HPP
#define SECLOGIT_SRC_FIT_INTERNAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "seclogit/data.hpp"
#include "seclogit/engine.hpp"
#include "seclogit/errors.hpp"
#include "seclogit/matinv.hpp"
#include "seclogit/primitives.hpp"
#include "seclogit/secure_ops.hpp"
#include "seclogit/shares.hpp"

namespace seclogit::internal {

// The partitioned data enters the protocol as-is: party j's X_j is its
// additive share of X, encoded locally, no messages.
struct SharedDesign {
  SharedMatrix x;
  SharedVector y;
  size_t n = 0;
  size_t d = 0;
};

inline SharedDesign encode_inputs(const std::vector<PartyInput>& inputs, Engine& eng) {
  if (inputs.size() != static_cast<size_t>(eng.parties())) {
    throw ValidationError("party input count does not match engine parties");
  }
  const auto& codec = eng.codec();
  SharedDesign out;
  out.n = static_cast<size_t>(inputs[0].X_j.rows());
  out.d = static_cast<size_t>(inputs[0].X_j.cols());
  for (const auto& p : inputs) {
    if (static_cast<size_t>(p.X_j.rows()) != out.n || static_cast<size_t>(p.X_j.cols()) != out.d ||
        static_cast<size_t>(p.y_j.size()) != out.n) {
      throw ValidationError("party input shapes disagree");
    }
    ShareMatrix xm{p.party_id, codec, codec.frac_bits(), out.n, out.d,
                   std::vector<RingElem>(out.n * out.d)};
    for (size_t i = 0; i < out.n; ++i) {
      for (size_t c = 0; c < out.d; ++c) {
        xm.at(i, c) = codec.encode(p.X_j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)));
      }
    }
    ShareVector yv{p.party_id, codec, codec.frac_bits(), std::vector<RingElem>(out.n)};
    for (size_t i = 0; i < out.n; ++i) {
      yv.elems[i] = codec.encode(p.y_j[static_cast<Eigen::Index>(i)]);
    }
    out.x.push_back(std::move(xm));
    out.y.push_back(std::move(yv));
  }
  return out;
}

// X^T v: one inner product per column, n products each.
inline SharedVector xt_times(const SharedMatrix& x, const SharedVector& v, Engine& eng) {
  const size_t d = x[0].cols;
  SharedVector out = zero_shared_vector(eng.codec(), eng.parties(), d, eng.codec().frac_bits());
  for (size_t c = 0; c < d; ++c) {
    SharedVector col;
    col.reserve(x.size());
    for (const auto& sm : x) {
      std::vector<RingElem> elems(sm.rows);
      for (size_t r = 0; r < sm.rows; ++r) elems[r] = sm.at(r, c);
      col.push_back(ShareVector{sm.party_id, sm.codec, sm.scale_bits, std::move(elems)});
    }
    SharedVector dot = inner_product(col, v, eng);
    for (size_t j = 0; j < out.size(); ++j) out[j].elems[c] = dot[j].elems[0];
  }
  return out;
}

// Per-case outer products x_i x_i^T (n d^2 products). Also returns their
// sum X^T X. keep_cases retains the per-case matrices for full-Newton
// Hessian assembly.
inline SharedMatrix xtx_shares(const SharedMatrix& x, Engine& eng, bool keep_cases,
                               std::vector<SharedMatrix>* cases) {
  const size_t n = x[0].rows, d = x[0].cols;
  SharedMatrix total = zero_shared_matrix(eng.codec(), eng.parties(), d, d, eng.codec().frac_bits());
  for (size_t i = 0; i < n; ++i) {
    SharedVector xi = row_of(x, i);
    SharedMatrix oi = outer_product(xi, xi, eng);
    total = add_local(total, oi);
    if (keep_cases) cases->push_back(std::move(oi));
  }
  return total;
}

// (X^T X)^-1 via the trace-normalized coupled iteration. Pre-dividing by
// the public case count keeps the matrix entries at unit scale, which is
// where the fixed-point iteration is accurate.
inline std::pair<SharedMatrix, int> invert_scaled(const SharedMatrix& a, double public_scale,
                                                  double eps, int max_iter, Engine& eng,
                                                  const std::string& mark_prefix) {
  eng.mark(mark_prefix + ".norm");
  SharedMatrix scaled = const_mul(a, 1.0 / public_scale, eng);
  InversionResult inv = sec_matrix_inverse(scaled, eps, eng, max_iter, mark_prefix);
  eng.mark(mark_prefix + ".denorm");
  SharedMatrix out = const_mul(inv.inverse_shares, 1.0 / public_scale, eng);
  return {std::move(out), inv.iterations};
}

// v - shares, with the public vector folded into party 0's share.
inline SharedVector public_minus(const Eigen::VectorXd& v, const SharedVector& a) {
  SharedVector out = neg_local(a);
  const auto& codec = out[0].codec;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[0].elems[static_cast<size_t>(i)] =
        codec.add(out[0].elems[static_cast<size_t>(i)], codec.encode(v[i]));
  }
  return out;
}

inline SharedVector one_minus(const SharedVector& a) {
  return public_minus(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(a[0].size())), a);
}

enum class TestKind { kOuter, kInversion };

// Reveals 1{stat > c} (strict, via the ring constant enc(c) + 1) to every
// party. Under a script the revealed bit follows the scripted schedule.
inline bool reveal_strictly_greater(const SharedVector& stat, double c, Engine& eng) {
  const auto& codec = eng.codec();
  const RingElem threshold =
      codec.add(codec.encode_at(c, stat[0].scale_bits), RingElem{1});
  GtOutcome g = interval_check(stat, threshold, Tag::kGtc, eng);
  bool scripted_bit = false;
  const bool* scripted = nullptr;
  if (eng.scripted()) {
    scripted_bit = eng.script_outer_continue();
    scripted = &scripted_bit;
  }
  return open_gt(g, scripted, eng);
}

}  // namespace seclogit::internal

#endif  // SECLOGIT_SRC_FIT_INTERNAL_HPP
