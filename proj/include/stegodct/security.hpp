#pragma once

#include <array>
#include <string>
#include <string_view>

namespace stegodct {

// Key 3: one character per cipher position, '1' = letter (A-F), '0' = digit.
struct PositionKey {
  std::string mask;
};

// Key 4: all cipher digits in original order, then the letters beyond the
// first seven in original order. pad_count records how many 'A' pad
// characters the septet carries when the cipher has fewer than 7 letters.
struct RemainderKey {
  std::string text;
  int pad_count = 0;
};

// The seven letter characters that actually travel inside the image.
struct PayloadSeptet {
  std::array<char, 7> chars{};
};

struct SplitResult {
  PayloadSeptet septet;
  PositionKey key3;
  RemainderKey key4;
};

// Splits a hex cipher into the hidden septet and the two generated keys.
// The first seven letters become the septet (padded with 'A' when fewer
// exist); every digit plus any letter past the seventh goes into key4.
// merge(split(c)) == c for every valid cipher.
SplitResult split(std::string_view cipher);

// Reconstructs the cipher exactly. Raises LengthMismatch when the key3
// popcount is inconsistent with the septet/key4 segment sizes, and
// CharsetViolation when a character lands in the wrong class.
std::string merge(const PayloadSeptet& septet, const PositionKey& key3,
                  const RemainderKey& key4);

}  // namespace stegodct
