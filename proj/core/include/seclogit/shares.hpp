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

#ifndef SECLOGIT_SHARES_HPP
#define SECLOGIT_SHARES_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "seclogit/prng.hpp"
#include "seclogit/ring.hpp"

namespace seclogit {

// One party's additive share of a vector. The modular sum of all parties'
// elems reconstructs the clear value. scale_bits tracks the fixed-point
// scale the elements carry: codec.frac_bits() for ordinary values, 0 for
// raw integers (bit counts), 2f for untruncated products.
struct ShareVector {
  int party_id = 0;
  FixedPointCodec codec;
  int scale_bits = 0;
  std::vector<RingElem> elems;

  size_t size() const { return elems.size(); }
};

// Row-major matrix counterpart of ShareVector.
struct ShareMatrix {
  int party_id = 0;
  FixedPointCodec codec;
  int scale_bits = 0;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<RingElem> elems;

  RingElem& at(size_t r, size_t c) { return elems[r * cols + c]; }
  RingElem at(size_t r, size_t c) const { return elems[r * cols + c]; }
};

// All parties' shares of one value, indexed by party id.
using SharedVector = std::vector<ShareVector>;
using SharedMatrix = std::vector<ShareMatrix>;

// --- splitting and reconstruction ----------------------------------------

// Divide a clear vector into `parties` additive shares. The first P-1
// shares are uniform on Z_B; the last absorbs the remainder.
SharedVector split_vector(const Eigen::VectorXd& clear, const FixedPointCodec& codec, int parties,
                          Prng& rng);
SharedMatrix split_matrix(const Eigen::MatrixXd& clear, const FixedPointCodec& codec, int parties,
                          Prng& rng);

Eigen::VectorXd reconstruct_vector(const SharedVector& shares);
Eigen::MatrixXd reconstruct_matrix(const SharedMatrix& shares);

// Modular sum of the share elements without decoding.
std::vector<RingElem> reconstruct_ring(const SharedVector& shares);

// All-zero sharing (every party holds zero).
SharedVector zero_shared_vector(const FixedPointCodec& codec, int parties, size_t len,
                                int scale_bits);
SharedMatrix zero_shared_matrix(const FixedPointCodec& codec, int parties, size_t rows,
                                size_t cols, int scale_bits);

// Degenerate sharing: party `holder` carries the encoded value, everyone
// else zero. This is how partitioned input data enters the protocol.
SharedVector held_vector(const Eigen::VectorXd& clear, const FixedPointCodec& codec, int parties,
                         int holder);

// --- message-free local arithmetic ---------------------------------------

ShareVector add_local(const ShareVector& a, const ShareVector& b);
ShareVector sub_local(const ShareVector& a, const ShareVector& b);
ShareVector neg_local(const ShareVector& a);

SharedVector add_local(const SharedVector& a, const SharedVector& b);
SharedVector sub_local(const SharedVector& a, const SharedVector& b);
SharedVector neg_local(const SharedVector& a);
SharedMatrix add_local(const SharedMatrix& a, const SharedMatrix& b);
SharedMatrix sub_local(const SharedMatrix& a, const SharedMatrix& b);

// Multiply every share by a public ring constant. The result scale is the
// sum of the operand scales; no truncation happens here.
SharedVector const_mul_raw(const SharedVector& a, RingElem c, int c_scale_bits);
SharedMatrix const_mul_raw(const SharedMatrix& a, RingElem c, int c_scale_bits);

}  // namespace seclogit

#endif  // SECLOGIT_SHARES_HPP
