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

#ifndef SECLOGIT_VIEW_SIM_HPP
#define SECLOGIT_VIEW_SIM_HPP

#include <string>

#include "seclogit/fit.hpp"
#include "seclogit/protocol1.hpp"
#include "seclogit/protocol2.hpp"
#include "seclogit/transcript.hpp"

namespace seclogit {

// Synthesizes a party's protocol view from its own input and the declared
// output triple alone: the protocol is re-run with every other party's input
// zeroed and the termination schedule scripted from the triple. Shares and
// masked values on the wire are fresh uniform draws by construction, the
// revealed termination bits follow the triple, and the final opening is a
// fresh sharing of the output parameter. If the real protocol's message
// schedule depended on anything beyond its declared output, the synthetic
// skeleton would diverge from the real one; checking them equal is the
// security harness's core test.

enum class ProtocolKind { kProtocol1, kProtocol2 };

struct ViewRunSpec {
  ProtocolKind protocol = ProtocolKind::kProtocol1;
  Protocol1Config p1;
  Protocol2Config p2;
  FixedPointCodec codec;
  int parties = 2;
};

// Full synthetic transcript of a scripted run (filter by receiver to get one
// party's view). `seed` drives the synthesis randomness and is independent
// of the real run's seed. Only single-inversion runs (hessian-lb protocol 1
// without a refinement schedule, or protocol 2) are synthesizable, since the
// output triple carries exactly one inversion count.
Transcript simulate_view(int party, const PartyInput& input, const FitOutput& output,
                         const ViewRunSpec& spec, uint64_t seed);

// True when the two transcripts deliver identical (round label, sender,
// tag, payload size) sequences to `party`. Mismatch details go to *diag.
bool same_view_skeleton(const Transcript& real, const Transcript& synthetic, int party,
                        std::string* diag = nullptr);

// --- statistics for the security harness ----------------------------------

// 16-bucket chi-square statistic for uniformity over Z_B (buckets by the
// top four modulus bits). 15 degrees of freedom.
double chi_square_16(const std::vector<uint64_t>& values, int modulus_bits);

// Critical value of chi-square with 15 df at significance 0.01.
inline constexpr double kChi2Crit15Df01 = 30.5779;

// Two-sample Kolmogorov-Smirnov distance between value sets mapped to [0,1).
double ks_two_sample(std::vector<uint64_t> a, std::vector<uint64_t> b);

// KS rejection threshold at significance 0.01 for sample sizes m, n.
double ks_threshold_01(size_t m, size_t n);

// Received payload values with the given tags, one u64 per 8-byte word.
std::vector<uint64_t> received_share_values(const Transcript& t, int party,
                                            std::initializer_list<Tag> tags);

// Received one-byte bit payloads for the given tag.
std::vector<uint8_t> received_bits(const Transcript& t, int party, Tag tag);

// Secure-product count attributed to all rounds whose label starts with
// `prefix` (or equals it, with `exact`): battery ole messages divided by
// P(P-1). Throws if the count is not divisible (would indicate non-battery
// oles under this prefix).
size_t phase_products(const Transcript& t, std::string_view prefix, int parties,
                      bool exact = false);

}  // namespace seclogit

#endif  // SECLOGIT_VIEW_SIM_HPP
