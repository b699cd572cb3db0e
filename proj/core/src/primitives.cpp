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

#include "seclogit/primitives.hpp"

#include "seclogit/errors.hpp"

namespace seclogit {

RingElem ole_eval(int j, int k, RingElem a_j, RingElem b_k, RingElem r_jk, Engine& eng) {
  if (j == k) throw ValidationError("ole_eval requires distinct parties");
  const auto& codec = eng.codec();
  const RingElem n = codec.add(codec.mul(a_j, b_k), r_jk);
  eng.bus().send(static_cast<uint8_t>(j), static_cast<uint8_t>(k), Tag::kOle,
                 ring_payload(n.v));
  return RingElem{payload_ring(eng.bus().recv(static_cast<uint8_t>(j), static_cast<uint8_t>(k)))};
}

GtOutcome gt_xor(int party_a, RingElem u, int party_b, RingElem v, Tag tag, Engine& eng) {
  const auto& codec = eng.codec();
  const bool result = codec.to_signed(codec.sub(u, v)) >= 0;
  const bool mask = eng.party_rng(party_a).bit();
  const bool delivered = mask ^ result;
  eng.bus().send(static_cast<uint8_t>(party_a), static_cast<uint8_t>(party_b), tag,
                 bit_payload(delivered));
  const bool bit_b = payload_bit(
      eng.bus().recv(static_cast<uint8_t>(party_a), static_cast<uint8_t>(party_b)));
  return GtOutcome{party_a, party_b, mask, bit_b};
}

std::vector<RingElem> fold_side(const SharedVector& a, int keeper, Engine& eng) {
  const auto& codec = eng.codec();
  const size_t len = a[0].size();
  std::vector<RingElem> folded = a[static_cast<size_t>(keeper)].elems;
  for (int j = 1; j < eng.parties(); ++j) {
    if (j == keeper) continue;
    for (size_t i = 0; i < len; ++i) {
      eng.bus().send(static_cast<uint8_t>(j), static_cast<uint8_t>(keeper), Tag::kAgg,
                     ring_payload(a[static_cast<size_t>(j)].elems[i].v));
      const RingElem got{
          payload_ring(eng.bus().recv(static_cast<uint8_t>(j), static_cast<uint8_t>(keeper)))};
      folded[i] = codec.add(folded[i], got);
    }
  }
  return folded;
}

GtOutcome interval_check(const SharedVector& a, RingElem c, Tag tag, Engine& eng) {
  if (a.empty() || a[0].size() != 1) throw ValidationError("interval_check expects a shared scalar");
  const auto& codec = eng.codec();
  const RingElem u = a[0].elems[0];
  const RingElem side = fold_side(a, 1, eng)[0];
  const RingElem v = codec.sub(c, side);
  return gt_xor(0, u, 1, v, tag, eng);
}

GtOutcome interval_check(const SharedVector& a, double c, Tag tag, Engine& eng) {
  return interval_check(a, eng.codec().encode_at(c, a[0].scale_bits), tag, eng);
}

bool open_gt(const GtOutcome& g, const bool* scripted, Engine& eng) {
  auto& bus = eng.bus();
  bus.send(static_cast<uint8_t>(g.party_a), static_cast<uint8_t>(g.party_b), Tag::kOpen,
           bit_payload(g.bit_a));
  const bool got =
      payload_bit(bus.recv(static_cast<uint8_t>(g.party_a), static_cast<uint8_t>(g.party_b)));
  const bool result = scripted ? *scripted : (got ^ g.bit_b);
  for (int j = 0; j < eng.parties(); ++j) {
    if (j == g.party_b) continue;
    bus.send(static_cast<uint8_t>(g.party_b), static_cast<uint8_t>(j), Tag::kOpen,
             bit_payload(result));
    bus.recv(static_cast<uint8_t>(g.party_b), static_cast<uint8_t>(j));
  }
  return result;
}

SharedVector truncate_shares(const SharedVector& shares, int to_scale, Engine& eng) {
  const auto& codec = eng.codec();
  const int from_scale = shares[0].scale_bits;
  if (from_scale < to_scale) throw ValidationError("truncate_shares cannot raise the scale");
  const size_t len = shares[0].size();
  const int parties = eng.parties();

  SharedVector out = zero_shared_vector(codec, parties, len, to_scale);
  for (size_t i = 0; i < len; ++i) {
    RingElem sum{};
    for (const auto& sv : shares) sum = codec.add(sum, sv.elems[i]);
    RingElem value = codec.truncate(sum, from_scale - to_scale);

    RingElem rest = value;
    for (int j = 0; j < parties; ++j) {
      RingElem piece;
      if (j + 1 < parties) {
        piece = eng.dealer_rng().ring_uniform(codec);
        rest = codec.sub(rest, piece);
      } else {
        piece = rest;
      }
      eng.bus().send(kDealer, static_cast<uint8_t>(j), Tag::kTrunc, ring_payload(piece.v));
      out[static_cast<size_t>(j)].elems[i] =
          RingElem{payload_ring(eng.bus().recv(kDealer, static_cast<uint8_t>(j)))};
    }
  }
  return out;
}

Eigen::VectorXd open_vector(const SharedVector& shares, Engine& eng) {
  const auto& codec = eng.codec();
  const int parties = eng.parties();
  const size_t len = shares[0].size();

  // Under a script the exchanged shares are a fresh sharing of the declared
  // output, so they sum to it by construction.
  std::vector<std::vector<RingElem>> to_send(static_cast<size_t>(parties));
  if (eng.scripted()) {
    const auto& beta = eng.script()->beta;
    for (auto& v : to_send) v.assign(len, RingElem{});
    for (size_t i = 0; i < len; ++i) {
      RingElem rest = codec.encode_at(beta[static_cast<Eigen::Index>(i)], shares[0].scale_bits);
      for (int j = 0; j + 1 < parties; ++j) {
        const RingElem r = eng.dealer_rng().ring_uniform(codec);
        to_send[static_cast<size_t>(j)][i] = r;
        rest = codec.sub(rest, r);
      }
      to_send[static_cast<size_t>(parties - 1)][i] = rest;
    }
  } else {
    for (int j = 0; j < parties; ++j) to_send[static_cast<size_t>(j)] = shares[static_cast<size_t>(j)].elems;
  }

  std::vector<RingElem> sum = to_send[0];
  for (int j = 0; j < parties; ++j) {
    std::vector<uint8_t> payload;
    payload.reserve(len * 8);
    for (const auto& e : to_send[static_cast<size_t>(j)]) {
      const auto p = ring_payload(e.v);
      payload.insert(payload.end(), p.begin(), p.end());
    }
    for (int k = 0; k < parties; ++k) {
      if (k == j) continue;
      eng.bus().send(static_cast<uint8_t>(j), static_cast<uint8_t>(k), Tag::kOpen, payload);
      eng.bus().recv(static_cast<uint8_t>(j), static_cast<uint8_t>(k));
    }
    if (j > 0) {
      for (size_t i = 0; i < len; ++i) sum[i] = codec.add(sum[i], to_send[static_cast<size_t>(j)][i]);
    }
  }

  Eigen::VectorXd out(static_cast<Eigen::Index>(len));
  for (size_t i = 0; i < len; ++i) {
    out[static_cast<Eigen::Index>(i)] = codec.decode_at(sum[i], shares[0].scale_bits);
  }
  return out;
}

}  // namespace seclogit
