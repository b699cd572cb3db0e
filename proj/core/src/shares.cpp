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

#include "seclogit/shares.hpp"

#include "seclogit/errors.hpp"

namespace seclogit {

namespace {

void check_same_shape(const ShareVector& a, const ShareVector& b) {
  if (a.size() != b.size()) throw ValidationError("share vector length mismatch");
  if (!(a.codec == b.codec)) throw ValidationError("codec mismatch");
  if (a.scale_bits != b.scale_bits) throw ValidationError("scale mismatch");
  if (a.party_id != b.party_id) throw ValidationError("party mismatch");
}

void check_same_shape(const ShareMatrix& a, const ShareMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ValidationError("share matrix shape mismatch");
  if (!(a.codec == b.codec)) throw ValidationError("codec mismatch");
  if (a.scale_bits != b.scale_bits) throw ValidationError("scale mismatch");
  if (a.party_id != b.party_id) throw ValidationError("party mismatch");
}

}  // namespace

SharedVector split_vector(const Eigen::VectorXd& clear, const FixedPointCodec& codec, int parties,
                          Prng& rng) {
  if (parties < 2) throw ValidationError("split requires at least two parties");
  SharedVector shares;
  shares.reserve(static_cast<size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    shares.push_back(ShareVector{j, codec, codec.frac_bits(),
                                 std::vector<RingElem>(static_cast<size_t>(clear.size()))});
  }
  for (Eigen::Index i = 0; i < clear.size(); ++i) {
    RingElem rest = codec.encode(clear[i]);
    for (int j = 0; j < parties - 1; ++j) {
      RingElem r = rng.ring_uniform(codec);
      shares[static_cast<size_t>(j)].elems[static_cast<size_t>(i)] = r;
      rest = codec.sub(rest, r);
    }
    shares[static_cast<size_t>(parties - 1)].elems[static_cast<size_t>(i)] = rest;
  }
  return shares;
}

SharedMatrix split_matrix(const Eigen::MatrixXd& clear, const FixedPointCodec& codec, int parties,
                          Prng& rng) {
  if (parties < 2) throw ValidationError("split requires at least two parties");
  const auto rows = static_cast<size_t>(clear.rows());
  const auto cols = static_cast<size_t>(clear.cols());
  SharedMatrix shares;
  shares.reserve(static_cast<size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    shares.push_back(ShareMatrix{j, codec, codec.frac_bits(), rows, cols,
                                 std::vector<RingElem>(rows * cols)});
  }
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      RingElem rest = codec.encode(clear(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
      for (int j = 0; j < parties - 1; ++j) {
        RingElem u = rng.ring_uniform(codec);
        shares[static_cast<size_t>(j)].at(r, c) = u;
        rest = codec.sub(rest, u);
      }
      shares[static_cast<size_t>(parties - 1)].at(r, c) = rest;
    }
  }
  return shares;
}

std::vector<RingElem> reconstruct_ring(const SharedVector& shares) {
  if (shares.empty()) throw ValidationError("no shares");
  const auto& codec = shares[0].codec;
  std::vector<RingElem> sum(shares[0].size());
  for (const auto& sv : shares) {
    if (sv.size() != sum.size() || !(sv.codec == codec) || sv.scale_bits != shares[0].scale_bits) {
      throw ValidationError("inconsistent shares in reconstruction");
    }
    for (size_t i = 0; i < sum.size(); ++i) sum[i] = codec.add(sum[i], sv.elems[i]);
  }
  return sum;
}

Eigen::VectorXd reconstruct_vector(const SharedVector& shares) {
  const auto sum = reconstruct_ring(shares);
  const auto& codec = shares[0].codec;
  Eigen::VectorXd out(static_cast<Eigen::Index>(sum.size()));
  for (size_t i = 0; i < sum.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = codec.decode_at(sum[i], shares[0].scale_bits);
  }
  return out;
}

Eigen::MatrixXd reconstruct_matrix(const SharedMatrix& shares) {
  if (shares.empty()) throw ValidationError("no shares");
  const auto& codec = shares[0].codec;
  const size_t rows = shares[0].rows, cols = shares[0].cols;
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      RingElem sum{};
      for (const auto& sm : shares) {
        if (sm.rows != rows || sm.cols != cols) throw ValidationError("share shape mismatch");
        sum = codec.add(sum, sm.at(r, c));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          codec.decode_at(sum, shares[0].scale_bits);
    }
  }
  return out;
}

SharedVector zero_shared_vector(const FixedPointCodec& codec, int parties, size_t len,
                                int scale_bits) {
  SharedVector out;
  out.reserve(static_cast<size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    out.push_back(ShareVector{j, codec, scale_bits, std::vector<RingElem>(len)});
  }
  return out;
}

SharedMatrix zero_shared_matrix(const FixedPointCodec& codec, int parties, size_t rows,
                                size_t cols, int scale_bits) {
  SharedMatrix out;
  out.reserve(static_cast<size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    out.push_back(ShareMatrix{j, codec, scale_bits, rows, cols, std::vector<RingElem>(rows * cols)});
  }
  return out;
}

SharedVector held_vector(const Eigen::VectorXd& clear, const FixedPointCodec& codec, int parties,
                         int holder) {
  SharedVector out = zero_shared_vector(codec, parties, static_cast<size_t>(clear.size()),
                                        codec.frac_bits());
  for (Eigen::Index i = 0; i < clear.size(); ++i) {
    out[static_cast<size_t>(holder)].elems[static_cast<size_t>(i)] = codec.encode(clear[i]);
  }
  return out;
}

ShareVector add_local(const ShareVector& a, const ShareVector& b) {
  check_same_shape(a, b);
  ShareVector out = a;
  for (size_t i = 0; i < out.size(); ++i) out.elems[i] = a.codec.add(a.elems[i], b.elems[i]);
  return out;
}

ShareVector sub_local(const ShareVector& a, const ShareVector& b) {
  check_same_shape(a, b);
  ShareVector out = a;
  for (size_t i = 0; i < out.size(); ++i) out.elems[i] = a.codec.sub(a.elems[i], b.elems[i]);
  return out;
}

ShareVector neg_local(const ShareVector& a) {
  ShareVector out = a;
  for (auto& e : out.elems) e = a.codec.neg(e);
  return out;
}

SharedVector add_local(const SharedVector& a, const SharedVector& b) {
  if (a.size() != b.size()) throw ValidationError("party count mismatch");
  SharedVector out;
  out.reserve(a.size());
  for (size_t j = 0; j < a.size(); ++j) out.push_back(add_local(a[j], b[j]));
  return out;
}

SharedVector sub_local(const SharedVector& a, const SharedVector& b) {
  if (a.size() != b.size()) throw ValidationError("party count mismatch");
  SharedVector out;
  out.reserve(a.size());
  for (size_t j = 0; j < a.size(); ++j) out.push_back(sub_local(a[j], b[j]));
  return out;
}

SharedVector neg_local(const SharedVector& a) {
  SharedVector out;
  out.reserve(a.size());
  for (const auto& sv : a) out.push_back(neg_local(sv));
  return out;
}

SharedMatrix add_local(const SharedMatrix& a, const SharedMatrix& b) {
  if (a.size() != b.size()) throw ValidationError("party count mismatch");
  SharedMatrix out = a;
  for (size_t j = 0; j < a.size(); ++j) {
    check_same_shape(a[j], b[j]);
    for (size_t i = 0; i < a[j].elems.size(); ++i) {
      out[j].elems[i] = a[j].codec.add(a[j].elems[i], b[j].elems[i]);
    }
  }
  return out;
}

SharedMatrix sub_local(const SharedMatrix& a, const SharedMatrix& b) {
  if (a.size() != b.size()) throw ValidationError("party count mismatch");
  SharedMatrix out = a;
  for (size_t j = 0; j < a.size(); ++j) {
    check_same_shape(a[j], b[j]);
    for (size_t i = 0; i < a[j].elems.size(); ++i) {
      out[j].elems[i] = a[j].codec.sub(a[j].elems[i], b[j].elems[i]);
    }
  }
  return out;
}

SharedVector const_mul_raw(const SharedVector& a, RingElem c, int c_scale_bits) {
  SharedVector out = a;
  for (auto& sv : out) {
    sv.scale_bits = a[0].scale_bits + c_scale_bits;
    for (auto& e : sv.elems) e = sv.codec.mul(e, c);
  }
  return out;
}

SharedMatrix const_mul_raw(const SharedMatrix& a, RingElem c, int c_scale_bits) {
  SharedMatrix out = a;
  for (auto& sm : out) {
    sm.scale_bits = a[0].scale_bits + c_scale_bits;
    for (auto& e : sm.elems) e = sm.codec.mul(e, c);
  }
  return out;
}


}  // namespace seclogit
