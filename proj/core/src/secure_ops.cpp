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

#include "seclogit/secure_ops.hpp"

#include "seclogit/errors.hpp"
#include "seclogit/primitives.hpp"

namespace seclogit {

SharedVector product_raw(const SharedVector& a, const SharedVector& b, Engine& eng) {
  const auto& codec = eng.codec();
  const int parties = eng.parties();
  if (a.size() != static_cast<size_t>(parties) || b.size() != a.size()) {
    throw ValidationError("product_raw party count mismatch");
  }
  const size_t len = a[0].size();
  if (b[0].size() != len) throw ValidationError("product_raw length mismatch");

  SharedVector c = zero_shared_vector(codec, parties, len, a[0].scale_bits + b[0].scale_bits);
  for (size_t i = 0; i < len; ++i) {
    for (int j = 0; j < parties; ++j) {
      c[static_cast<size_t>(j)].elems[i] = codec.mul(a[static_cast<size_t>(j)].elems[i],
                                                     b[static_cast<size_t>(j)].elems[i]);
    }
    for (int j = 0; j < parties; ++j) {
      for (int k = 0; k < parties; ++k) {
        if (j == k) continue;
        const RingElem r = eng.party_rng(j).ring_uniform(codec);
        const RingElem n = ole_eval(j, k, a[static_cast<size_t>(j)].elems[i],
                                    b[static_cast<size_t>(k)].elems[i], r, eng);
        auto& ck = c[static_cast<size_t>(k)].elems[i];
        ck = codec.add(ck, n);
        auto& cj = c[static_cast<size_t>(j)].elems[i];
        cj = codec.sub(cj, r);
      }
    }
  }
  return c;
}

SharedVector mul_shares(const SharedVector& a, const SharedVector& b, Engine& eng) {
  SharedVector c = product_raw(a, b, eng);
  const int f = eng.codec().frac_bits();
  if (c[0].scale_bits > f) {
    c = truncate_shares(c, f, eng);
  }
  return c;
}

SharedVector inner_product(const SharedVector& a, const SharedVector& b, Engine& eng) {
  const auto& codec = eng.codec();
  const int parties = eng.parties();
  SharedVector terms = mul_shares(a, b, eng);
  SharedVector out = zero_shared_vector(codec, parties, 1, terms[0].scale_bits);
  for (int j = 0; j < parties; ++j) {
    RingElem s{};
    for (const auto& e : terms[static_cast<size_t>(j)].elems) s = codec.add(s, e);
    out[static_cast<size_t>(j)].elems[0] = s;
  }
  return out;
}

SharedVector element_of(const SharedVector& a, size_t index) {
  SharedVector out;
  out.reserve(a.size());
  for (const auto& sv : a) {
    out.push_back(ShareVector{sv.party_id, sv.codec, sv.scale_bits, {sv.elems.at(index)}});
  }
  return out;
}

SharedVector row_of(const SharedMatrix& a, size_t row) {
  SharedVector out;
  out.reserve(a.size());
  for (const auto& sm : a) {
    std::vector<RingElem> elems(sm.cols);
    for (size_t c = 0; c < sm.cols; ++c) elems[c] = sm.at(row, c);
    out.push_back(ShareVector{sm.party_id, sm.codec, sm.scale_bits, std::move(elems)});
  }
  return out;
}

SharedMatrix as_matrix(const SharedVector& a, size_t rows, size_t cols) {
  SharedMatrix out;
  out.reserve(a.size());
  for (const auto& sv : a) {
    if (sv.size() != rows * cols) throw ValidationError("as_matrix size mismatch");
    out.push_back(ShareMatrix{sv.party_id, sv.codec, sv.scale_bits, rows, cols, sv.elems});
  }
  return out;
}

namespace {

SharedVector column_of(const SharedMatrix& a, size_t col) {
  SharedVector out;
  out.reserve(a.size());
  for (const auto& sm : a) {
    std::vector<RingElem> elems(sm.rows);
    for (size_t r = 0; r < sm.rows; ++r) elems[r] = sm.at(r, col);
    out.push_back(ShareVector{sm.party_id, sm.codec, sm.scale_bits, std::move(elems)});
  }
  return out;
}

}  // namespace

SharedVector matvec(const SharedMatrix& a, const SharedVector& x, Engine& eng) {
  if (a[0].cols != x[0].size()) throw ValidationError("matvec dimension mismatch");
  const int parties = eng.parties();
  SharedVector out = zero_shared_vector(eng.codec(), parties, a[0].rows, eng.codec().frac_bits());
  for (size_t r = 0; r < a[0].rows; ++r) {
    SharedVector dot = inner_product(row_of(a, r), x, eng);
    for (int j = 0; j < parties; ++j) {
      out[static_cast<size_t>(j)].elems[r] = dot[static_cast<size_t>(j)].elems[0];
      out[static_cast<size_t>(j)].scale_bits = dot[static_cast<size_t>(j)].scale_bits;
    }
  }
  return out;
}

SharedMatrix matmul(const SharedMatrix& a, const SharedMatrix& b, Engine& eng) {
  if (a[0].cols != b[0].rows) throw ValidationError("matmul dimension mismatch");
  const int parties = eng.parties();
  const size_t rows = a[0].rows, cols = b[0].cols;
  SharedMatrix out = zero_shared_matrix(eng.codec(), parties, rows, cols, eng.codec().frac_bits());
  for (size_t c = 0; c < cols; ++c) {
    const SharedVector bc = column_of(b, c);
    for (size_t r = 0; r < rows; ++r) {
      SharedVector dot = inner_product(row_of(a, r), bc, eng);
      for (int j = 0; j < parties; ++j) {
        out[static_cast<size_t>(j)].at(r, c) = dot[static_cast<size_t>(j)].elems[0];
        out[static_cast<size_t>(j)].scale_bits = dot[static_cast<size_t>(j)].scale_bits;
      }
    }
  }
  return out;
}

SharedMatrix outer_product(const SharedVector& a, const SharedVector& b, Engine& eng) {
  const int parties = eng.parties();
  const size_t rows = a[0].size(), cols = b[0].size();
  SharedMatrix out = zero_shared_matrix(eng.codec(), parties, rows, cols, eng.codec().frac_bits());
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      SharedVector prod = mul_shares(element_of(a, r), element_of(b, c), eng);
      for (int j = 0; j < parties; ++j) {
        out[static_cast<size_t>(j)].at(r, c) = prod[static_cast<size_t>(j)].elems[0];
        out[static_cast<size_t>(j)].scale_bits = prod[static_cast<size_t>(j)].scale_bits;
      }
    }
  }
  return out;
}

SharedVector const_mul(const SharedVector& a, double c, Engine& eng) {
  const auto& codec = eng.codec();
  SharedVector out = const_mul_raw(a, codec.encode(c), codec.frac_bits());
  if (out[0].scale_bits > codec.frac_bits()) {
    out = truncate_shares(out, codec.frac_bits(), eng);
  }
  return out;
}

SharedMatrix const_mul(const SharedMatrix& a, double c, Engine& eng) {
  const auto& codec = eng.codec();
  SharedMatrix raw = const_mul_raw(a, codec.encode(c), codec.frac_bits());
  if (raw[0].scale_bits <= codec.frac_bits()) return raw;
  const size_t rows = raw[0].rows, cols = raw[0].cols;
  SharedVector flat;
  flat.reserve(raw.size());
  for (auto& sm : raw) {
    flat.push_back(ShareVector{sm.party_id, sm.codec, sm.scale_bits, std::move(sm.elems)});
  }
  return as_matrix(truncate_shares(flat, codec.frac_bits(), eng), rows, cols);
}

SharedVector xor_to_additive(const std::vector<uint8_t>& bits_a,
                             const std::vector<uint8_t>& bits_b, Engine& eng) {
  if (bits_a.size() != bits_b.size()) throw ValidationError("xor_to_additive length mismatch");
  const auto& codec = eng.codec();
  const int parties = eng.parties();

  RingElem sum_a{}, sum_b{};
  RingElem cross_a{}, cross_b{};
  for (size_t l = 0; l < bits_a.size(); ++l) {
    const RingElem oa{static_cast<uint64_t>(bits_a[l] ? 1 : 0)};
    const RingElem ob{static_cast<uint64_t>(bits_b[l] ? 1 : 0)};
    sum_a = codec.add(sum_a, oa);
    sum_b = codec.add(sum_b, ob);
    const RingElem r = eng.party_rng(0).ring_uniform(codec);
    const RingElem n = ole_eval(0, 1, oa, ob, r, eng);
    cross_a = codec.sub(cross_a, r);  // m = -r
    cross_b = codec.add(cross_b, n);
  }

  SharedVector out = zero_shared_vector(codec, parties, 1, 0);
  const RingElem two{2};
  out[0].elems[0] = codec.sub(sum_a, codec.mul(two, cross_a));
  out[1].elems[0] = codec.sub(sum_b, codec.mul(two, cross_b));
  return out;
}

}  // namespace seclogit
