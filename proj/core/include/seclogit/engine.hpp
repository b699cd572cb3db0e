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

#ifndef SECLOGIT_ENGINE_HPP
#define SECLOGIT_ENGINE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seclogit/prng.hpp"
#include "seclogit/ring.hpp"
#include "seclogit/transcript.hpp"

namespace seclogit {

// Termination schedule + output used when synthesizing a party's view from
// the protocol's declared output (parameter vector, outer iteration count,
// inversion iteration count). With the schedule scripted, the message
// skeleton of a run depends only on public dimensions and this triple.
struct ViewScript {
  Eigen::VectorXd beta;
  int outer_iterations = 0;
  int inversion_iterations = 0;
};

// Holds everything one protocol execution needs: the codec, the message bus
// with its transcript, one seeded randomness source per party, and one for
// the trusted functionalities. Party j's randomness must only ever be drawn
// through party_rng(j); cross-party values move exclusively over the bus.
class Engine {
 public:
  Engine(FixedPointCodec codec, int parties, uint64_t seed);

  const FixedPointCodec& codec() const { return codec_; }
  int parties() const { return parties_; }

  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }
  MessageBus& bus() { return bus_; }

  Prng& party_rng(int j) { return party_rng_.at(static_cast<size_t>(j)); }
  Prng& dealer_rng() { return dealer_rng_; }

  uint32_t mark(std::string label) { return transcript_.mark(std::move(label)); }

  // --- view synthesis ---------------------------------------------------
  void set_script(ViewScript script) {
    script_ = std::move(script);
    outer_tests_seen_ = 0;
    inversion_tests_seen_ = 0;
  }
  bool scripted() const { return script_.has_value(); }
  const ViewScript* script() const { return script_ ? &*script_ : nullptr; }

  // Bit revealed by the next outer convergence test: 1 (continue) on every
  // round before the scripted count, 0 (halt) on the final one.
  bool script_outer_continue() { return ++outer_tests_seen_ < script_->outer_iterations; }

  // Bit revealed by the next inversion trace test: 0 (continue) until the
  // scripted iteration count is reached, then 1 (converged).
  bool script_inversion_halt() { return ++inversion_tests_seen_ > script_->inversion_iterations; }

 private:
  FixedPointCodec codec_;
  int parties_;
  Transcript transcript_;
  MessageBus bus_;
  std::vector<Prng> party_rng_;
  Prng dealer_rng_;
  std::optional<ViewScript> script_;
  int outer_tests_seen_ = 0;
  int inversion_tests_seen_ = 0;
};

}  // namespace seclogit

#endif  // SECLOGIT_ENGINE_HPP
