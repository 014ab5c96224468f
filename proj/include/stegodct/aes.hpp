#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace stegodct {

// 128-bit AES key (the pipeline's Key 1).
struct AesKey {
  std::array<std::uint8_t, 16> bytes{};

  // Expects exactly 32 hex characters, case-insensitive.
  static AesKey from_hex(std::string_view hex32);
};

// Raw AES-128 block primitive (FIPS-197), no padding, no mode.
void encrypt_block(const std::uint8_t in[16], const AesKey& key,
                   std::uint8_t out[16]);
void decrypt_block(const std::uint8_t in[16], const AesKey& key,
                   std::uint8_t out[16]);

// AES-128-ECB over PKCS#7-padded plaintext, rendered as uppercase hex.
// ECB carries no IV, which is what lets the rest of the pipeline treat the
// cipher as a self-contained string; see README for the security caveat.
// Output length is 32 * ceil((len+1)/16) characters.
std::string encrypt(std::string_view plaintext, const AesKey& key);

// Inverse of encrypt. Accepts lowercase hex. Raises MalformedHex when the
// input is not hex or not a positive multiple of 32 characters, and
// InvalidPadding when the padding check fails (wrong key or corruption).
std::string decrypt(std::string_view hex_cipher, const AesKey& key);

}  // namespace stegodct
