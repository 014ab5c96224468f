#include "support/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <openssl/evp.h>

namespace testsupport {

namespace {

struct CtxGuard {
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  ~CtxGuard() { EVP_CIPHER_CTX_free(ctx); }
};

std::string to_upper_hex(const std::vector<unsigned char>& bytes) {
  static const char digits[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 0x0F];
  }
  return out;
}

}  // namespace

std::string openssl_ecb_encrypt_hex(std::string_view plaintext,
                                    const std::array<std::uint8_t, 16>& key) {
  CtxGuard guard;
  if (!guard.ctx ||
      EVP_EncryptInit_ex(guard.ctx, EVP_aes_128_ecb(), nullptr,
                         key.data(), nullptr) != 1)
    throw std::runtime_error("EVP init failed");

  std::vector<unsigned char> out(plaintext.size() + 32);
  int len1 = 0;
  if (EVP_EncryptUpdate(guard.ctx, out.data(), &len1,
                        reinterpret_cast<const unsigned char*>(plaintext.data()),
                        static_cast<int>(plaintext.size())) != 1)
    throw std::runtime_error("EVP update failed");
  int len2 = 0;
  if (EVP_EncryptFinal_ex(guard.ctx, out.data() + len1, &len2) != 1)
    throw std::runtime_error("EVP final failed");
  out.resize(static_cast<std::size_t>(len1 + len2));
  return to_upper_hex(out);
}

std::array<std::uint8_t, 16> openssl_encrypt_block(
    const std::array<std::uint8_t, 16>& block,
    const std::array<std::uint8_t, 16>& key) {
  CtxGuard guard;
  if (!guard.ctx ||
      EVP_EncryptInit_ex(guard.ctx, EVP_aes_128_ecb(), nullptr,
                         key.data(), nullptr) != 1)
    throw std::runtime_error("EVP init failed");
  EVP_CIPHER_CTX_set_padding(guard.ctx, 0);

  std::array<std::uint8_t, 16> out{};
  int len = 0;
  if (EVP_EncryptUpdate(guard.ctx, out.data(), &len, block.data(), 16) != 1 ||
      len != 16)
    throw std::runtime_error("EVP block encrypt failed");
  int len2 = 0;
  if (EVP_EncryptFinal_ex(guard.ctx, out.data() + len, &len2) != 1 || len2 != 0)
    throw std::runtime_error("EVP block final failed");
  return out;
}

void naive_block_dct(const double in[64], double out[64]) {
  const double pi = std::numbers::pi;
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      const double au = u == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      const double av = v == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      double acc = 0.0;
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
          acc += in[r * 8 + c] * std::cos((2 * r + 1) * u * pi / 16.0) *
                 std::cos((2 * c + 1) * v * pi / 16.0);
      out[u * 8 + v] = au * av * acc;
    }
  }
}

}  // namespace testsupport
