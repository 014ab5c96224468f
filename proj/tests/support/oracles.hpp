// Independent reference implementations the tests check the library
// against. Nothing here shares code with src/.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace testsupport {

// AES-128-ECB + PKCS#7 via OpenSSL EVP, result as uppercase hex.
std::string openssl_ecb_encrypt_hex(std::string_view plaintext,
                                    const std::array<std::uint8_t, 16>& key);

// Raw single-block AES-128 encryption via OpenSSL (no padding).
std::array<std::uint8_t, 16> openssl_encrypt_block(
    const std::array<std::uint8_t, 16>& block,
    const std::array<std::uint8_t, 16>& key);

// Literal O(N^4) orthonormal 2-D DCT-II over one 8x8 block:
// F(u,v) = a(u) a(v) sum_r sum_c p(r,c) cos((2r+1)u pi/16) cos((2c+1)v pi/16).
void naive_block_dct(const double in[64], double out[64]);

}  // namespace testsupport
