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

#ifndef SECLOGIT_SECURE_OPS_HPP
#define SECLOGIT_SECURE_OPS_HPP

#include <cstdint>
#include <vector>

#include "seclogit/engine.hpp"
#include "seclogit/shares.hpp"

namespace seclogit {

// Secure products over additive shares. Each scalar product runs the
// pairwise oblivious evaluation for all ordered party pairs (j,k), j != k:
//
//   c_j = a_j b_j + sum_{k != j} (n_{k,j} + m_{j,k})
//
// so every product costs P(P-1) ole messages. Works for any input sharing,
// including the degenerate one where a single party holds the value.

// Elementwise product battery without truncation; the result carries scale
// a.scale + b.scale.
SharedVector product_raw(const SharedVector& a, const SharedVector& b, Engine& eng);

// Elementwise product truncated back to the working scale f (no truncation
// happens if the combined scale is already <= f, e.g. an integer-scale
// factor).
SharedVector mul_shares(const SharedVector& a, const SharedVector& b, Engine& eng);

// Inner product: per-term secure products (each truncated) summed locally.
// Cumulative truncation error is at most one ulp per term.
SharedVector inner_product(const SharedVector& a, const SharedVector& b, Engine& eng);

SharedVector matvec(const SharedMatrix& a, const SharedVector& x, Engine& eng);
SharedMatrix matmul(const SharedMatrix& a, const SharedMatrix& b, Engine& eng);
SharedMatrix outer_product(const SharedVector& a, const SharedVector& b, Engine& eng);

// Multiply by a public constant (encoded at scale f) and truncate back to f.
SharedVector const_mul(const SharedVector& a, double c, Engine& eng);
SharedMatrix const_mul(const SharedMatrix& a, double c, Engine& eng);

// Converts xor shares into additive shares of the Hamming weight of the
// xor, via sum(o_a ^ o_b) = sum(o_a) + sum(o_b) - 2 * <o_a, o_b>. The cross
// term costs one ole per bit position. Two-sided: party 0 holds bits_a,
// party 1 holds bits_b; the result is a shared scalar at integer scale.
SharedVector xor_to_additive(const std::vector<uint8_t>& bits_a,
                             const std::vector<uint8_t>& bits_b, Engine& eng);

// Extract one element / row / column as a shared scalar or vector.
SharedVector element_of(const SharedVector& a, size_t index);
SharedVector row_of(const SharedMatrix& a, size_t row);
SharedMatrix as_matrix(const SharedVector& a, size_t rows, size_t cols);

}  // namespace seclogit

#endif  // SECLOGIT_SECURE_OPS_HPP
