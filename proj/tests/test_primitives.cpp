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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "seclogit/engine.hpp"
#include "seclogit/primitives.hpp"
#include "seclogit/secure_ops.hpp"
#include "seclogit/view_sim.hpp"
#include "test_util.hpp"

using namespace seclogit;
using seclogit::testutil::vec;

TEST_CASE("ole_eval delivers a masked product share") {
  Engine eng(FixedPointCodec{}, 2, 1);
  const auto& codec = eng.codec();

  SUBCASE("zero coefficient reveals only the mask") {
    const RingElem r = RingElem{12345};
    const RingElem n = ole_eval(0, 1, RingElem{0}, codec.encode(9.0), r, eng);
    CHECK(n == r);
    CHECK(codec.add(codec.neg(r), n).v == 0);  // m + n reconstructs a_j * b_k = 0
  }
  SUBCASE("unit coefficient at integer scale passes the input through") {
    const RingElem b = codec.encode(4.25);
    const RingElem r = RingElem{999};
    const RingElem n = ole_eval(0, 1, RingElem{1}, b, r, eng);
    CHECK(codec.sub(n, r) == b);
  }
  SUBCASE("random pairs always reconstruct in the ring") {
    Prng rng(2);
    for (int i = 0; i < 1000; ++i) {
      const RingElem a = rng.ring_uniform(codec);
      const RingElem b = rng.ring_uniform(codec);
      const RingElem r = rng.ring_uniform(codec);
      const RingElem n = ole_eval(0, 1, a, b, r, eng);
      CHECK(codec.add(codec.neg(r), n) == codec.mul(a, b));
    }
  }
  SUBCASE("same party on both ends is rejected") {
    CHECK_THROWS_AS(ole_eval(1, 1, RingElem{1}, RingElem{1}, RingElem{0}, eng), ValidationError);
  }
}

TEST_CASE("gt_xor computes the signed predicate") {
  Engine eng(FixedPointCodec{}, 2, 3);
  const auto& codec = eng.codec();

  SUBCASE("equality is inclusive") {
    const GtOutcome g = gt_xor(0, codec.encode(2.5), 1, codec.encode(2.5), Tag::kGt, eng);
    CHECK((g.bit_a ^ g.bit_b) == true);
  }
  SUBCASE("signed comparison of a negative value") {
    const GtOutcome g = gt_xor(0, codec.encode(-1.0), 1, codec.encode(0.0), Tag::kGt, eng);
    CHECK((g.bit_a ^ g.bit_b) == false);
  }
  SUBCASE("random pairs vs direct comparison, output bits near fair") {
    Prng rng(4);
    size_t ones_a = 0, ones_b = 0;
    const int trials = 10000;
    for (int i = 0; i < trials; ++i) {
      const double a = (rng.unit() - 0.5) * 50.0;
      const double b = (rng.unit() - 0.5) * 50.0;
      const GtOutcome g = gt_xor(0, codec.encode(a), 1, codec.encode(b), Tag::kGt, eng);
      CHECK((g.bit_a ^ g.bit_b) == (codec.decode(codec.encode(a)) >= codec.decode(codec.encode(b))));
      ones_a += g.bit_a;
      ones_b += g.bit_b;
    }
    // Binomial test at significance 0.01: |p - 1/2| <= 2.576 sqrt(1/4N).
    const double slack = 2.576 * std::sqrt(0.25 / trials);
    CHECK(std::fabs(double(ones_a) / trials - 0.5) <= slack);
    CHECK(std::fabs(double(ones_b) / trials - 0.5) <= slack);
  }
}

TEST_CASE("interval_check reduces shared-vs-constant to two sides") {
  SUBCASE("examples") {
    Engine eng(FixedPointCodec{}, 2, 5);
    Prng rng(5);
    const auto a = split_vector(vec({5.0}), eng.codec(), 2, rng);
    GtOutcome g = interval_check(a, 3.0, Tag::kGtc, eng);
    CHECK((g.bit_a ^ g.bit_b) == true);
    g = interval_check(a, 5.0, Tag::kGtc, eng);  // boundary is inclusive
    CHECK((g.bit_a ^ g.bit_b) == true);
    g = interval_check(a, 5.0 + eng.codec().resolution(), Tag::kGtc, eng);
    CHECK((g.bit_a ^ g.bit_b) == false);
  }
  SUBCASE("random shared values and constants, three parties") {
    Prng rng(6);
    for (int i = 0; i < 1000; ++i) {
      Engine eng(FixedPointCodec{}, 3, static_cast<uint64_t>(i));
      const double a = (rng.unit() - 0.5) * 100.0;
      const double c = (rng.unit() - 0.5) * 100.0;
      Prng srng(i + 42);
      const auto shares = split_vector(vec({a}), eng.codec(), 3, srng);
      const GtOutcome g = interval_check(shares, c, Tag::kGtc, eng);
      const auto& codec = eng.codec();
      const bool expect = codec.decode(reconstruct_ring(shares)[0]) >= codec.decode(codec.encode(c));
      CHECK((g.bit_a ^ g.bit_b) == expect);
    }
  }
}

TEST_CASE("open_gt reveals the predicate to every party") {
  Engine eng(FixedPointCodec{}, 3, 7);
  Prng rng(7);
  const auto a = split_vector(vec({1.0}), eng.codec(), 3, rng);
  const GtOutcome g = interval_check(a, 0.5, Tag::kGtc, eng);
  CHECK(open_gt(g, nullptr, eng) == true);
  // One a->b bit plus a broadcast to the P-1 non-b parties.
  CHECK(eng.transcript().count(Tag::kOpen) == 3);
}

TEST_CASE("truncation functionality is exact and sharing-invariant") {
  const FixedPointCodec codec;
  const int f = codec.frac_bits();
  Prng rng(8);
  for (int i = 0; i < 200; ++i) {
    const double x = (rng.unit() - 0.5) * 500.0;
    // Two different sharings of the same scale-2f value.
    Engine e1(codec, 2, 100 + i);
    Engine e2(codec, 3, 200 + i);
    Prng r1(300 + i), r2(400 + i);

    const RingElem v = codec.encode_at(x, 2 * f);
    auto share_at_2f = [&](int parties, Prng& r) {
      SharedVector s = zero_shared_vector(codec, parties, 1, 2 * f);
      RingElem rest = v;
      for (int j = 0; j + 1 < parties; ++j) {
        s[j].elems[0] = r.ring_uniform(codec);
        rest = codec.sub(rest, s[j].elems[0]);
      }
      s[parties - 1].elems[0] = rest;
      return s;
    };
    const RingElem t1 = reconstruct_ring(truncate_shares(share_at_2f(2, r1), f, e1))[0];
    const RingElem t2 = reconstruct_ring(truncate_shares(share_at_2f(3, r2), f, e2))[0];
    CHECK(t1 == codec.truncate(v, f));
    CHECK(t2 == codec.truncate(v, f));
  }
}

TEST_CASE("transcripts replay byte-identically under the same seed") {
  auto run = [](uint64_t seed) {
    Engine eng(FixedPointCodec{}, 2, seed);
    Prng rng(seed + 1);
    const auto a = split_vector(vec({1.5, -2.0}), eng.codec(), 2, rng);
    const auto b = split_vector(vec({0.25, 8.0}), eng.codec(), 2, rng);
    mul_shares(a, b, eng);
    interval_check(inner_product(a, b, eng), 1.0, Tag::kGtc, eng);
    std::ostringstream os;
    eng.transcript().export_csv(os);
    return os.str();
  };
  CHECK(run(42) == run(42));
  CHECK(run(42) != run(43));
}

TEST_CASE("bus delivers per-pair messages in FIFO order") {
  Transcript t;
  MessageBus bus(2, t);
  bus.send(0, 1, Tag::kOle, {1});
  bus.send(0, 1, Tag::kOle, {2});
  bus.send(1, 0, Tag::kOle, {9});
  CHECK(bus.recv(0, 1) == std::vector<uint8_t>{1});
  CHECK(bus.recv(0, 1) == std::vector<uint8_t>{2});
  CHECK(bus.recv(1, 0) == std::vector<uint8_t>{9});
  CHECK_THROWS(bus.recv(0, 1));
  CHECK(t.entries().size() == 3);
}

TEST_CASE("export format is round,sender,receiver,tag,hex") {
  Engine eng(FixedPointCodec{}, 2, 9);
  eng.mark("demo");
  eng.bus().send(0, 1, Tag::kGt, {0x01});
  eng.bus().send(1, 0, Tag::kOle, ring_payload(0xDEADBEEFull));
  std::ostringstream os;
  eng.transcript().export_csv(os);
  CHECK(os.str() == "0,0,1,gt,01\n0,1,0,ole,efbeadde00000000\n");
}

TEST_CASE("no party state or message ever carries another party's raw input") {
  // Distinctive encodings that cannot arise by chance.
  const FixedPointCodec codec;
  Engine eng(codec, 2, 10);
  const double secret0 = 123.4567891234;
  const double secret1 = -98.7654321987;
  const auto a = held_vector(vec({secret0}), codec, 2, 0);
  const auto b = held_vector(vec({secret1}), codec, 2, 1);
  const auto c = mul_shares(a, b, eng);
  interval_check(c, 1.0, Tag::kGtc, eng);

  const std::set<uint64_t> secrets{codec.encode(secret0).v, codec.encode(secret1).v};
  for (const auto& e : eng.transcript().entries()) {
    for (size_t off = 0; off + 8 <= e.payload.size(); off += 8) {
      CHECK(secrets.count(payload_ring({e.payload.data() + off, 8})) == 0);
    }
  }
  // Result shares held by each party are masked as well.
  CHECK(secrets.count(c[0].elems[0].v) == 0);
  CHECK(secrets.count(c[1].elems[0].v) == 0);
}
