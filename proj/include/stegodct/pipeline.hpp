#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stegodct/aes.hpp"
#include "stegodct/image.hpp"
#include "stegodct/metrics.hpp"
#include "stegodct/security.hpp"
#include "stegodct/stego.hpp"

namespace stegodct {

// Calibrated defaults; threshold defaults to twice the persistence factor
// so a bit-0 subtraction keeps the coefficient strictly positive.
inline constexpr double kDefaultPersistence = 30.0;
inline constexpr double kDefaultThreshold = 60.0;

// Everything the receiver needs besides the cover image, Key 1 and Key 2.
struct KeyFile {
  PositionKey key3;
  RemainderKey key4;
  double d = kDefaultPersistence;
  double t = kDefaultThreshold;
};

// Line-oriented text, exactly:
//   KEY3=<bitstring>  KEY4=<text>  PAD=<0..7>  D=<decimal>  T=<decimal>
// one per line, that order, each line ending in a single newline.
// parse(serialize(k)) == k and serialize(parse(s)) == s byte-exactly.
std::string serialize_key_file(const KeyFile& keys);
KeyFile parse_key_file(std::string_view text);

// Shortest decimal representation that parses back to the same double
// (integers print without a fraction). Used by the key file and the CLI.
std::string format_decimal(double value);

struct HideResult {
  GrayImage stego;
  KeyFile keys;
  QualityReport quality;
};

// encrypt -> split -> scramble -> forward DCT -> select sites -> embed ->
// inverse DCT. The cover is never modified. Errors are tagged with the
// stage that raised them.
HideResult hide_message(std::string_view plaintext, const GrayImage& cover,
                        const AesKey& key1, const ScrambleKey& key2,
                        double d = kDefaultPersistence,
                        double t = kDefaultThreshold);

struct RevealResult {
  std::string plaintext;
  std::vector<int> weak_sites;
};

// Non-blind inverse of hide_message: needs the exact original cover plus
// all four keys. Forward DCT on both images -> select sites on the cover
// plane -> extract -> unscramble -> merge -> decrypt.
RevealResult reveal_message(const GrayImage& stego, const GrayImage& cover,
                            const AesKey& key1, const ScrambleKey& key2,
                            const KeyFile& keys);

}  // namespace stegodct
