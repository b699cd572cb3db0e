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

#include "seclogit/view_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seclogit/errors.hpp"

namespace seclogit {

Transcript simulate_view(int party, const PartyInput& input, const FitOutput& output,
                         const ViewRunSpec& spec, uint64_t seed) {
  if (party < 0 || party >= spec.parties) throw ValidationError("bad party index");
  if (output.outer_iterations < 1) {
    throw ValidationError("output triple is missing a usable outer iteration count");
  }
  if (spec.protocol == ProtocolKind::kProtocol1) {
    if (spec.p1.hessian_mode != HessianMode::kHessianLb) {
      throw ValidationError(
          "view synthesis requires the single-inversion mode (per-round inversion counts are "
          "not part of the output triple)");
    }
    if (!spec.p1.refinement_schedule.empty()) {
      throw ValidationError("view synthesis does not support refinement schedules");
    }
  }

  std::vector<PartyInput> inputs(static_cast<size_t>(spec.parties));
  for (int j = 0; j < spec.parties; ++j) {
    auto& p = inputs[static_cast<size_t>(j)];
    p.party_id = j;
    if (j == party) {
      p.X_j = input.X_j;
      p.y_j = input.y_j;
    } else {
      p.X_j = Eigen::MatrixXd::Zero(input.X_j.rows(), input.X_j.cols());
      p.y_j = Eigen::VectorXd::Zero(input.y_j.size());
    }
  }

  Engine eng(spec.codec, spec.parties, seed);
  eng.set_script(ViewScript{output.beta, output.outer_iterations, output.inversion_iterations});

  if (spec.protocol == ProtocolKind::kProtocol1) {
    Protocol1Config cfg = spec.p1;
    cfg.max_outer = std::max(cfg.max_outer, output.outer_iterations);
    fit_protocol1(inputs, cfg, eng);
  } else {
    Protocol2Config cfg = spec.p2;
    cfg.max_outer = std::max(cfg.max_outer, output.outer_iterations);
    fit_protocol2(inputs, cfg, eng);
  }
  return eng.transcript();
}

bool same_view_skeleton(const Transcript& real, const Transcript& synthetic, int party,
                        std::string* diag) {
  const auto a = real.received_by(static_cast<uint8_t>(party));
  const auto b = synthetic.received_by(static_cast<uint8_t>(party));
  if (a.size() != b.size()) {
    if (diag) {
      std::ostringstream os;
      os << "message counts differ: real=" << a.size() << " synthetic=" << b.size();
      *diag = os.str();
    }
    return false;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    const bool same = real.label_of(a[i]->round) == synthetic.label_of(b[i]->round) &&
                      a[i]->sender == b[i]->sender && a[i]->tag == b[i]->tag &&
                      a[i]->payload.size() == b[i]->payload.size();
    if (!same) {
      if (diag) {
        std::ostringstream os;
        os << "entry " << i << " differs: real (" << real.label_of(a[i]->round) << ","
           << int(a[i]->sender) << "," << tag_name(a[i]->tag) << "," << a[i]->payload.size()
           << ") synthetic (" << synthetic.label_of(b[i]->round) << "," << int(b[i]->sender) << ","
           << tag_name(b[i]->tag) << "," << b[i]->payload.size() << ")";
        *diag = os.str();
      }
      return false;
    }
  }
  return true;
}

double chi_square_16(const std::vector<uint64_t>& values, int modulus_bits) {
  if (values.empty()) return 0.0;
  double counts[16] = {0};
  for (uint64_t v : values) {
    counts[(v >> (modulus_bits - 4)) & 0xF] += 1.0;
  }
  const double expected = static_cast<double>(values.size()) / 16.0;
  double stat = 0;
  for (double c : counts) stat += (c - expected) * (c - expected) / expected;
  return stat;
}

double ks_two_sample(std::vector<uint64_t> a, std::vector<uint64_t> b) {
  if (a.empty() || b.empty()) return 0.0;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_threshold_01(size_t m, size_t n) {
  // c(0.01) = sqrt(-ln(0.005) / 2)
  const double c = std::sqrt(-std::log(0.005) / 2.0);
  const double mm = static_cast<double>(m), nn = static_cast<double>(n);
  return c * std::sqrt((mm + nn) / (mm * nn));
}

std::vector<uint64_t> received_share_values(const Transcript& t, int party,
                                            std::initializer_list<Tag> tags) {
  std::vector<uint64_t> out;
  for (const auto& e : t.entries()) {
    if (e.receiver != party) continue;
    bool want = false;
    for (Tag tag : tags) want |= e.tag == tag;
    if (!want || e.payload.size() < 8) continue;
    for (size_t off = 0; off + 8 <= e.payload.size(); off += 8) {
      out.push_back(payload_ring({e.payload.data() + off, 8}));
    }
  }
  return out;
}

std::vector<uint8_t> received_bits(const Transcript& t, int party, Tag tag) {
  std::vector<uint8_t> out;
  for (const auto& e : t.entries()) {
    if (e.receiver == party && e.tag == tag && e.payload.size() == 1) out.push_back(e.payload[0]);
  }
  return out;
}

size_t phase_products(const Transcript& t, std::string_view prefix, int parties, bool exact) {
  const size_t oles = t.count(Tag::kOle, prefix, exact);
  const size_t battery = static_cast<size_t>(parties) * static_cast<size_t>(parties - 1);
  if (oles % battery != 0) {
    throw ValidationError("ole count under '" + std::string(prefix) +
                          "' is not a whole number of product batteries");
  }
  return oles / battery;
}

}  // namespace seclogit
