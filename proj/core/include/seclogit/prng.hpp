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

#ifndef SECLOGIT_PRNG_HPP
#define SECLOGIT_PRNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "seclogit/ring.hpp"

namespace seclogit {

// Seeded, replayable randomness source. One instance per party plus one for
// each trusted functionality, so that transcripts are byte-identical across
// runs with the same seeds. Avoids std::uniform_*_distribution on purpose:
// mt19937_64 output is pinned by the standard, the distributions are not.
class Prng {
 public:
  explicit Prng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  RingElem ring_uniform(const FixedPointCodec& codec) {
    return RingElem{next_u64() & codec.mask()};
  }

  bool bit() { return (next_u64() & 1u) != 0; }

  // Uniform on the open interval (0, 1).
  double unit() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  // Standard logistic draw via inverse CDF.
  double logistic() {
    const double u = unit();
    return std::log(u / (1.0 - u));
  }

  // splitmix64 step, used to derive independent per-party seeds from one
  // run seed.
  static uint64_t mix(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace seclogit

#endif  // SECLOGIT_PRNG_HPP
