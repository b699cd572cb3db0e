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

#ifndef SECLOGIT_PRIMITIVES_HPP
#define SECLOGIT_PRIMITIVES_HPP

#include <vector>

#include "seclogit/engine.hpp"
#include "seclogit/shares.hpp"

namespace seclogit {

// The cryptographic sub-protocols are modeled as trusted functionalities
// with explicit leakage contracts:
//
//   ole_eval  party j sets up f(x) = a_j x + r_jk; party k learns only
//             f(b_k), party j learns nothing of the evaluation.
//   gt_xor    each side learns only its xor-share of 1{u >= v}; the share
//             bits are individually uniform.
//
// Every delivery crosses the MessageBus, so the transcript records exactly
// what a wire implementation would expose.

// Delivers n_jk = a_j * b_k + r_jk to party k and returns it. Party j keeps
// m_jk = -r_jk; (m_jk, n_jk) are additive shares of a_j * b_k.
RingElem ole_eval(int j, int k, RingElem a_j, RingElem b_k, RingElem r_jk, Engine& eng);

// Output of a two-sided greater-than evaluation with xor-shared result.
struct GtOutcome {
  int party_a = 0;
  int party_b = 1;
  bool bit_a = false;  // held by party_a (its own fresh mask)
  bool bit_b = false;  // delivered to party_b; bit_a ^ bit_b == 1{u >= v}
};

// Compares the signed embedded values as 1{u - v >= 0}. u is held by
// party_a, v by party_b; both must carry the same scale.
GtOutcome gt_xor(int party_a, RingElem u, int party_b, RingElem v, Tag tag, Engine& eng);

// 1{a >= c} for a shared scalar a (length-1 shares) against the public ring
// constant c. Parties >= 2 first forward their shares to party 1, which
// folds them into the second comparison side.
GtOutcome interval_check(const SharedVector& a, RingElem c, Tag tag, Engine& eng);
GtOutcome interval_check(const SharedVector& a, double c, Tag tag, Engine& eng);

// Reveals bit_a ^ bit_b to all parties: party_a sends its bit to party_b,
// party_b broadcasts the combination. When `scripted` is non-null (view
// synthesis), the broadcast carries the scripted value and that value is
// returned.
bool open_gt(const GtOutcome& g, const bool* scripted, Engine& eng);

// Exact truncation functionality: reconstructs the value behind `shares`,
// shifts it arithmetically down to `to_scale`, and deals fresh uniform
// shares of the result. The output depends only on the reconstructed value,
// never on the particular share decomposition, so protocol results are
// invariant to how the inputs were partitioned.
SharedVector truncate_shares(const SharedVector& shares, int to_scale, Engine& eng);

// Parties other than `keeper` and party 0 forward their share of each
// element to `keeper` (one kAgg message per element); returns the folded
// side values sum_{j>=1} a_j per element, now held by `keeper`.
std::vector<RingElem> fold_side(const SharedVector& a, int keeper, Engine& eng);

// Reveal a shared vector: every party sends its share vector to every other
// party (kOpen). Under a script the exchanged shares are a fresh sharing of
// the scripted output instead of the real shares.
Eigen::VectorXd open_vector(const SharedVector& shares, Engine& eng);

}  // namespace seclogit

#endif  // SECLOGIT_PRIMITIVES_HPP
