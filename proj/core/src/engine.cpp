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

#include "seclogit/engine.hpp"

#include "seclogit/errors.hpp"

namespace seclogit {

Engine::Engine(FixedPointCodec codec, int parties, uint64_t seed)
    : codec_(codec),
      parties_(parties),
      bus_(parties, transcript_),
      dealer_rng_(Prng::mix(seed, 0xD5A1E5u)) {
  if (parties < 2) {
    throw ValidationError("at least two parties required");
  }
  if (parties >= kDealer) {
    throw ValidationError("party count too large");
  }
  party_rng_.reserve(static_cast<size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    party_rng_.emplace_back(Prng::mix(seed, static_cast<uint64_t>(j)));
  }
}

}  // namespace seclogit
