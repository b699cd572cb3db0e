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

#ifndef SECLOGIT_MATINV_HPP
#define SECLOGIT_MATINV_HPP

#include <string>

#include "seclogit/engine.hpp"
#include "seclogit/shares.hpp"

namespace seclogit {

// Division-free reciprocal and matrix inversion on shares, using only
// products and subtractions so the share constructions above suffice.

struct InversionResult {
  SharedMatrix inverse_shares;
  int iterations = 0;  // coupled-iteration updates performed
};

// Iteration budget that brings x_{s+1} = x_s(2 - a x_s) from the starting
// value 2^(1-f) to convergence for any decoded a >= 1: the iterate roughly
// doubles once per step until a*x approaches 1, then converges
// quadratically. Public (depends only on the codec), so runs using it have
// a data-independent message schedule.
int fixed_reciprocal_iterations(const FixedPointCodec& codec);

// Newton's iteration for 1/a with an adaptive secure stopping test
// 1{a*x >= 1 - eps} (one kGtc per iteration). Requires 0 < x0 < 1/a; the
// iterate then approaches 1/a from below, so the one-sided test is
// equivalent to |a*x - 1| <= eps. Throws NonConvergenceError with the
// residual trace after max_iter.
SharedVector sec_reciprocal(const SharedVector& a, double x0, double eps, Engine& eng,
                            int max_iter = 64);

// Same iteration run for a fixed public number of steps, no stopping test.
SharedVector sec_reciprocal_fixed(const SharedVector& a, double x0, int iterations, Engine& eng);

// Coupled Newton-Schulz inversion of a shared SPD matrix:
//
//   X_{s+1} = 2 X_s - X_s M_s,   X_0 = c^-1 I
//   M_{s+1} = 2 M_s - M_s^2,     M_0 = c^-1 A
//
// with c = trace(A), whose shares every party computes locally. c^-1 comes
// from the fixed-count scalar iteration started at 2^(1-f). Each coupled
// update costs 2d^3 products; the trace test 1{tr(M_s) >= d - eps} costs
// one kGtc evaluation per iteration (tr(M_s) approaches d from below for
// SPD input). Transcript rounds are labeled `<mark_prefix>.recip`,
// `<mark_prefix>.init` and `<mark_prefix>.it<s>`.
InversionResult sec_matrix_inverse(const SharedMatrix& a, double eps, Engine& eng,
                                   int max_iter = 64, const std::string& mark_prefix = "inv");

}  // namespace seclogit

#endif  // SECLOGIT_MATINV_HPP
