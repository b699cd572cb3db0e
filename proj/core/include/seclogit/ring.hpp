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

#ifndef SECLOGIT_RING_HPP
#define SECLOGIT_RING_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include "seclogit/errors.hpp"

namespace seclogit {

// One element of Z_B for B = 2^modulus_bits. Plain carrier; all semantics
// (masking, sign embedding, scaling) live in FixedPointCodec.
struct RingElem {
  uint64_t v = 0;

  friend bool operator==(RingElem a, RingElem b) { return a.v == b.v; }
  friend bool operator!=(RingElem a, RingElem b) { return a.v != b.v; }
};

// Signed fixed-point values embedded in Z_B.
//
// A real x is carried as round(x * 2^frac_bits) mod B. Values in [0, B/2)
// are non-negative, values in [B/2, B) are negative via wraparound. Addition
// and multiplication are exact ring operations; a product of two values at
// scale f carries 2f fractional bits and must be truncated explicitly.
// Overflow inside the ring wraps silently; encode() is the only validity
// gate.
class FixedPointCodec {
 public:
  explicit FixedPointCodec(int modulus_bits = 64, int frac_bits = 24)
      : modulus_bits_(modulus_bits), frac_bits_(frac_bits) {
    if (modulus_bits < 8 || modulus_bits > 64) {
      throw ValidationError("modulus_bits must be in [8, 64]");
    }
    if (frac_bits < 1 || frac_bits >= modulus_bits / 2) {
      throw ValidationError("frac_bits must satisfy 1 <= f < modulus_bits/2");
    }
    mask_ = modulus_bits == 64 ? ~uint64_t{0} : ((uint64_t{1} << modulus_bits) - 1);
  }

  int modulus_bits() const { return modulus_bits_; }
  int frac_bits() const { return frac_bits_; }
  uint64_t mask() const { return mask_; }

  // Smallest representable increment, 2^-f.
  double resolution() const { return std::ldexp(1.0, -frac_bits_); }

  // Largest magnitude encodable at scale f: 2^(modulus_bits - f - 1).
  double range() const { return std::ldexp(1.0, modulus_bits_ - frac_bits_ - 1); }

  bool representable(double x) const { return std::isfinite(x) && std::fabs(x) < range(); }

  RingElem encode(double x) const { return encode_at(x, frac_bits_); }

  // Encode at an explicit scale (0 for raw integers, 2f for product-scale
  // constants).
  RingElem encode_at(double x, int scale_bits) const {
    if (!std::isfinite(x) || std::fabs(x) >= std::ldexp(1.0, modulus_bits_ - scale_bits - 1)) {
      throw OverflowError("value " + std::to_string(x) + " not representable at scale " +
                          std::to_string(scale_bits) + ", B=2^" + std::to_string(modulus_bits_));
    }
    const double scaled = x * std::ldexp(1.0, scale_bits);
    const auto as_int = static_cast<int64_t>(std::llround(scaled));
    return RingElem{static_cast<uint64_t>(as_int) & mask_};
  }

  // Interpret the ring element as a signed integer in [-B/2, B/2).
  int64_t to_signed(RingElem a) const {
    const int shift = 64 - modulus_bits_;
    return static_cast<int64_t>(a.v << shift) >> shift;
  }

  double decode(RingElem a) const {
    return static_cast<double>(to_signed(a)) * std::ldexp(1.0, -frac_bits_);
  }

  // Decode a value carried at an explicit scale (0 for raw integers, 2f for
  // untruncated products).
  double decode_at(RingElem a, int scale_bits) const {
    return static_cast<double>(to_signed(a)) * std::ldexp(1.0, -scale_bits);
  }

  RingElem add(RingElem a, RingElem b) const { return RingElem{(a.v + b.v) & mask_}; }
  RingElem sub(RingElem a, RingElem b) const { return RingElem{(a.v - b.v) & mask_}; }
  RingElem neg(RingElem a) const { return RingElem{(~a.v + 1) & mask_}; }
  RingElem mul(RingElem a, RingElem b) const { return RingElem{(a.v * b.v) & mask_}; }

  // Arithmetic right shift preserving the sign embedding (floor of the
  // signed value divided by 2^bits). Shifting a scale-2f product by f bits
  // returns it to scale f.
  RingElem truncate(RingElem a, int bits) const {
    return RingElem{static_cast<uint64_t>(to_signed(a) >> bits) & mask_};
  }

  bool operator==(const FixedPointCodec& o) const {
    return modulus_bits_ == o.modulus_bits_ && frac_bits_ == o.frac_bits_;
  }

 private:
  int modulus_bits_;
  int frac_bits_;
  uint64_t mask_;
};

}  // namespace seclogit

#endif  // SECLOGIT_RING_HPP
