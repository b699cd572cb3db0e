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

#ifndef SECLOGIT_TRANSCRIPT_HPP
#define SECLOGIT_TRANSCRIPT_HPP

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seclogit {

// Kind of message crossing the bus.
//   kOle   masked cross term a_j*b_k + r delivered during a product
//   kGt    xor-share bit of a greater-than evaluation (sigmoid path)
//   kGtc   xor-share bit of a greater-than used by a termination test
//   kAgg   share forwarded to fold parties >= 2 onto the second GT side
//   kTrunc fresh share delivered by the truncation functionality
//   kOpen  revealed value (termination bits, final parameter shares)
enum class Tag : uint8_t { kOle, kGt, kGtc, kAgg, kTrunc, kOpen };

const char* tag_name(Tag tag);

// Pseudo-party id used as the sender of trusted-functionality deliveries.
inline constexpr uint8_t kDealer = 0xFF;

struct TranscriptEntry {
  uint32_t round;
  uint8_t sender;
  uint8_t receiver;
  Tag tag;
  std::vector<uint8_t> payload;
};

// Append-only record of every inter-party message, in delivery order.
// Rounds are opened with mark(); each mark gets a label such as "o3.gh"
// (outer round 3, gradient/Hessian phase) so per-phase primitive counts can
// be audited after a run.
class Transcript {
 public:
  uint32_t mark(std::string label);
  void append(uint8_t sender, uint8_t receiver, Tag tag, std::vector<uint8_t> payload);

  // Recording is on by default. Bulk statistical runs that never inspect
  // the transcript can switch it off to keep memory flat; delivery
  // semantics are unchanged.
  void set_recording(bool on) { recording_ = on; }
  bool recording() const { return recording_; }

  const std::vector<TranscriptEntry>& entries() const { return entries_; }
  const std::vector<std::string>& round_labels() const { return labels_; }
  uint32_t current_round() const { return labels_.empty() ? 0 : static_cast<uint32_t>(labels_.size()) - 1; }
  const std::string& label_of(uint32_t round) const { return labels_.at(round); }

  // Number of entries with the given tag whose round label starts with
  // `label_prefix` (empty prefix matches everything). With `exact` the
  // label must match in full, which matters for numbered phases where
  // "it1" is a prefix of "it10".
  size_t count(Tag tag, std::string_view label_prefix = {}, bool exact = false) const;

  // Entries restricted to one receiving party, i.e. that party's incoming
  // view of the protocol.
  std::vector<const TranscriptEntry*> received_by(uint8_t party) const;

  // One line per message: round,sender,receiver,tag,hex_payload
  void export_csv(std::ostream& os) const;

 private:
  std::vector<TranscriptEntry> entries_;
  std::vector<std::string> labels_;
  bool recording_ = true;
};

// Per-ordered-pair FIFO delivery with transcript recording. Every send is
// appended to the transcript before it becomes receivable. Safe for
// concurrent use by distinct party threads.
class MessageBus {
 public:
  MessageBus(int parties, Transcript& transcript)
      : parties_(parties), transcript_(transcript) {}

  int parties() const { return parties_; }

  void send(uint8_t from, uint8_t to, Tag tag, std::vector<uint8_t> payload);
  std::vector<uint8_t> recv(uint8_t from, uint8_t to);

  Transcript& transcript() { return transcript_; }

 private:
  int parties_;
  Transcript& transcript_;
  std::mutex mu_;
  std::map<std::pair<uint8_t, uint8_t>, std::deque<std::vector<uint8_t>>> queues_;
};

// Little-endian payload helpers.
std::vector<uint8_t> ring_payload(uint64_t v);
uint64_t payload_ring(std::span<const uint8_t> p);
std::vector<uint8_t> bit_payload(bool b);
bool payload_bit(std::span<const uint8_t> p);

}  // namespace seclogit

#endif  // SECLOGIT_TRANSCRIPT_HPP
