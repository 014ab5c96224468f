#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "stegodct/dct.hpp"
#include "stegodct/security.hpp"

namespace stegodct {

// 64-bit scramble key (the pipeline's Key 2).
struct ScrambleKey {
  std::array<std::uint8_t, 8> bytes{};

  // Expects exactly 16 hex characters, case-insensitive.
  static ScrambleKey from_hex(std::string_view hex16);
};

// The 56 payload bits: seven 8-bit character codes, MSB first per
// character. Bit i of the stream is carried by plan site i.
struct PayloadBits {
  std::array<std::uint8_t, 7> bytes{};

  bool bit(int i) const {
    return (bytes[static_cast<std::size_t>(i) / 8] >> (7 - i % 8)) & 1;
  }
  void set_bit(int i, bool v) {
    auto& b = bytes[static_cast<std::size_t>(i) / 8];
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - i % 8));
    b = v ? (b | mask) : (b & ~mask);
  }
  bool operator==(const PayloadBits&) const = default;
};

// XORs septet byte i with key byte i (i = 0..6), rotates the 7-byte array
// left by key byte 7 mod 7, and serializes MSB-first. A permutation-
// substitution stand-in, not a cipher: it exercises all 64 key bits and is
// exactly invertible given the key.
PayloadBits scramble(const PayloadSeptet& septet, const ScrambleKey& key);

// Exact inverse (rotate right, then XOR). Raises CharsetViolation when the
// recovered bytes are not all in A-F, which signals a wrong key or a
// corrupted extraction.
PayloadSeptet unscramble(const PayloadBits& bits, const ScrambleKey& key);

// Adds d to the coefficient at plan site i for bit 1, subtracts d for
// bit 0; every other coefficient is untouched. Raises PlanPlaneMismatch
// when a site's recorded value disagrees with the plane.
DctPlane embed(const DctPlane& plane, const EmbedPlan& plan,
               const PayloadBits& bits);

struct ExtractResult {
  PayloadBits bits;
  // Sites whose |stego - original| fell below d/2; decoded anyway (zero
  // difference reads as bit 0) but reported so callers can warn.
  std::vector<int> weak_sites;
};

// Non-blind retrieval: bit i is 1 when the stego-minus-original difference
// at site i is positive, else 0.
ExtractResult extract(const DctPlane& original, const DctPlane& stego,
                      const EmbedPlan& plan);

}  // namespace stegodct
