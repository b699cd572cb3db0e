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

#include "seclogit/transcript.hpp"

#include <ostream>
#include <stdexcept>

namespace seclogit {

const char* tag_name(Tag tag) {
  switch (tag) {
    case Tag::kOle:
      return "ole";
    case Tag::kGt:
      return "gt";
    case Tag::kGtc:
      return "gtc";
    case Tag::kAgg:
      return "agg";
    case Tag::kTrunc:
      return "tr";
    case Tag::kOpen:
      return "open";
  }
  return "?";
}

uint32_t Transcript::mark(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<uint32_t>(labels_.size()) - 1;
}

void Transcript::append(uint8_t sender, uint8_t receiver, Tag tag, std::vector<uint8_t> payload) {
  if (!recording_) return;
  if (labels_.empty()) {
    labels_.emplace_back("start");
  }
  entries_.push_back(TranscriptEntry{current_round(), sender, receiver, tag, std::move(payload)});
}

size_t Transcript::count(Tag tag, std::string_view label_prefix, bool exact) const {
  size_t n = 0;
  for (const auto& e : entries_) {
    if (e.tag != tag) continue;
    const std::string& label = labels_[e.round];
    if (exact ? label != label_prefix
              : (!label_prefix.empty() && label.rfind(label_prefix, 0) != 0)) {
      continue;
    }
    ++n;
  }
  return n;
}

std::vector<const TranscriptEntry*> Transcript::received_by(uint8_t party) const {
  std::vector<const TranscriptEntry*> out;
  for (const auto& e : entries_) {
    if (e.receiver == party) out.push_back(&e);
  }
  return out;
}

void Transcript::export_csv(std::ostream& os) const {
  static const char* hex = "0123456789abcdef";
  for (const auto& e : entries_) {
    os << e.round << ',' << int(e.sender) << ',' << int(e.receiver) << ',' << tag_name(e.tag)
       << ',';
    for (uint8_t b : e.payload) {
      os << hex[b >> 4] << hex[b & 0xF];
    }
    os << '\n';
  }
}

void MessageBus::send(uint8_t from, uint8_t to, Tag tag, std::vector<uint8_t> payload) {
  std::lock_guard<std::mutex> lock(mu_);
  transcript_.append(from, to, tag, payload);
  queues_[{from, to}].push_back(std::move(payload));
}

std::vector<uint8_t> MessageBus::recv(uint8_t from, uint8_t to) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = queues_.find({from, to});
  if (it == queues_.end() || it->second.empty()) {
    throw std::logic_error("recv on empty queue");
  }
  std::vector<uint8_t> payload = std::move(it->second.front());
  it->second.pop_front();
  return payload;
}

std::vector<uint8_t> ring_payload(uint64_t v) {
  std::vector<uint8_t> p(8);
  for (int i = 0; i < 8; ++i) p[i] = static_cast<uint8_t>(v >> (8 * i));
  return p;
}

uint64_t payload_ring(std::span<const uint8_t> p) {
  uint64_t v = 0;
  for (int i = 0; i < 8 && i < static_cast<int>(p.size()); ++i) {
    v |= static_cast<uint64_t>(p[i]) << (8 * i);
  }
  return v;
}

std::vector<uint8_t> bit_payload(bool b) { return {static_cast<uint8_t>(b ? 1 : 0)}; }

bool payload_bit(std::span<const uint8_t> p) { return !p.empty() && p[0] != 0; }

}  // namespace seclogit
