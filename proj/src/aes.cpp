// AES-128 per FIPS-197, 128-bit keys only. The S-box and its inverse are
// derived at startup from the GF(2^8) multiplicative inverse and the affine
// transform instead of being transcribed as literals.

#include "stegodct/aes.hpp"

#include <cstring>

#include "stegodct/error.hpp"
#include "stegodct/hex.hpp"

namespace stegodct {

namespace {

std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    const bool carry = a & 0x80;
    a <<= 1;
    if (carry) a ^= 0x1B;  // x^8 + x^4 + x^3 + x + 1
    b >>= 1;
  }
  return p;
}

struct SboxTables {
  std::uint8_t fwd[256];
  std::uint8_t inv[256];

  SboxTables() {
    std::uint8_t inverse[256] = {0};
    for (int x = 1; x < 256; ++x) {
      for (int y = 1; y < 256; ++y) {
        if (gf_mul(static_cast<std::uint8_t>(x),
                   static_cast<std::uint8_t>(y)) == 1) {
          inverse[x] = static_cast<std::uint8_t>(y);
          break;
        }
      }
    }
    auto rotl8 = [](std::uint8_t v, int n) {
      return static_cast<std::uint8_t>((v << n) | (v >> (8 - n)));
    };
    for (int x = 0; x < 256; ++x) {
      const std::uint8_t b = inverse[x];
      const std::uint8_t s = static_cast<std::uint8_t>(
          b ^ rotl8(b, 1) ^ rotl8(b, 2) ^ rotl8(b, 3) ^ rotl8(b, 4) ^ 0x63);
      fwd[x] = s;
      inv[s] = static_cast<std::uint8_t>(x);
    }
  }
};

const SboxTables& tables() {
  static const SboxTables t;
  return t;
}

constexpr int kRounds = 10;
constexpr int kKeyWords = 4;
constexpr int kExpandedWords = 4 * (kRounds + 1);

// Round keys as 44 words, each word 4 bytes in FIPS column order.
struct KeySchedule {
  std::uint8_t w[kExpandedWords][4];
};

KeySchedule expand_key(const AesKey& key) {
  const auto& sbox = tables().fwd;
  KeySchedule ks;
  for (int i = 0; i < kKeyWords; ++i)
    for (int j = 0; j < 4; ++j) ks.w[i][j] = key.bytes[4 * i + j];

  std::uint8_t rcon = 0x01;
  for (int i = kKeyWords; i < kExpandedWords; ++i) {
    std::uint8_t temp[4];
    std::memcpy(temp, ks.w[i - 1], 4);
    if (i % kKeyWords == 0) {
      // RotWord then SubWord then Rcon.
      const std::uint8_t t0 = temp[0];
      temp[0] = static_cast<std::uint8_t>(sbox[temp[1]] ^ rcon);
      temp[1] = sbox[temp[2]];
      temp[2] = sbox[temp[3]];
      temp[3] = sbox[t0];
      rcon = gf_mul(rcon, 2);
    }
    for (int j = 0; j < 4; ++j)
      ks.w[i][j] = static_cast<std::uint8_t>(ks.w[i - kKeyWords][j] ^ temp[j]);
  }
  return ks;
}

// State is indexed state[row + 4*col] per FIPS-197.
void add_round_key(std::uint8_t state[16], const KeySchedule& ks, int round) {
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) state[r + 4 * c] ^= ks.w[4 * round + c][r];
}

void sub_bytes(std::uint8_t state[16], const std::uint8_t box[256]) {
  for (int i = 0; i < 16; ++i) state[i] = box[state[i]];
}

void shift_rows(std::uint8_t state[16]) {
  for (int r = 1; r < 4; ++r) {
    std::uint8_t row[4];
    for (int c = 0; c < 4; ++c) row[c] = state[r + 4 * ((c + r) % 4)];
    for (int c = 0; c < 4; ++c) state[r + 4 * c] = row[c];
  }
}

void inv_shift_rows(std::uint8_t state[16]) {
  for (int r = 1; r < 4; ++r) {
    std::uint8_t row[4];
    for (int c = 0; c < 4; ++c) row[c] = state[r + 4 * ((c + 4 - r) % 4)];
    for (int c = 0; c < 4; ++c) state[r + 4 * c] = row[c];
  }
}

void mix_columns(std::uint8_t state[16]) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = state + 4 * c;
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = gf_mul(a0, 2) ^ gf_mul(a1, 3) ^ a2 ^ a3;
    col[1] = a0 ^ gf_mul(a1, 2) ^ gf_mul(a2, 3) ^ a3;
    col[2] = a0 ^ a1 ^ gf_mul(a2, 2) ^ gf_mul(a3, 3);
    col[3] = gf_mul(a0, 3) ^ a1 ^ a2 ^ gf_mul(a3, 2);
  }
}

void inv_mix_columns(std::uint8_t state[16]) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = state + 4 * c;
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = gf_mul(a0, 14) ^ gf_mul(a1, 11) ^ gf_mul(a2, 13) ^ gf_mul(a3, 9);
    col[1] = gf_mul(a0, 9) ^ gf_mul(a1, 14) ^ gf_mul(a2, 11) ^ gf_mul(a3, 13);
    col[2] = gf_mul(a0, 13) ^ gf_mul(a1, 9) ^ gf_mul(a2, 14) ^ gf_mul(a3, 11);
    col[3] = gf_mul(a0, 11) ^ gf_mul(a1, 13) ^ gf_mul(a2, 9) ^ gf_mul(a3, 14);
  }
}

constexpr std::size_t kBlockSize = 16;

}  // namespace

AesKey AesKey::from_hex(std::string_view hex32) {
  if (hex32.size() != 32)
    raise(ErrorKind::InvalidArgument,
          "key 1 must be exactly 32 hex characters");
  const auto bytes = hex_decode(hex32);
  AesKey key;
  std::copy(bytes.begin(), bytes.end(), key.bytes.begin());
  return key;
}

void encrypt_block(const std::uint8_t in[16], const AesKey& key,
                   std::uint8_t out[16]) {
  const KeySchedule ks = expand_key(key);
  std::uint8_t state[16];
  std::memcpy(state, in, 16);

  add_round_key(state, ks, 0);
  for (int round = 1; round < kRounds; ++round) {
    sub_bytes(state, tables().fwd);
    shift_rows(state);
    mix_columns(state);
    add_round_key(state, ks, round);
  }
  sub_bytes(state, tables().fwd);
  shift_rows(state);
  add_round_key(state, ks, kRounds);

  std::memcpy(out, state, 16);
}

void decrypt_block(const std::uint8_t in[16], const AesKey& key,
                   std::uint8_t out[16]) {
  const KeySchedule ks = expand_key(key);
  std::uint8_t state[16];
  std::memcpy(state, in, 16);

  add_round_key(state, ks, kRounds);
  for (int round = kRounds - 1; round > 0; --round) {
    inv_shift_rows(state);
    sub_bytes(state, tables().inv);
    add_round_key(state, ks, round);
    inv_mix_columns(state);
  }
  inv_shift_rows(state);
  sub_bytes(state, tables().inv);
  add_round_key(state, ks, 0);

  std::memcpy(out, state, 16);
}

std::string encrypt(std::string_view plaintext, const AesKey& key) {
  if (plaintext.empty())
    raise(ErrorKind::InvalidArgument, "plaintext must not be empty");

  // PKCS#7: always pad, even on block boundaries.
  const std::size_t pad = kBlockSize - plaintext.size() % kBlockSize;
  std::vector<std::uint8_t> data(plaintext.begin(), plaintext.end());
  data.insert(data.end(), pad, static_cast<std::uint8_t>(pad));

  for (std::size_t off = 0; off < data.size(); off += kBlockSize)
    encrypt_block(data.data() + off, key, data.data() + off);

  return hex_encode(data);
}

std::string decrypt(std::string_view hex_cipher, const AesKey& key) {
  if (hex_cipher.empty() || hex_cipher.size() % 32 != 0)
    raise(ErrorKind::MalformedHex,
          "cipher length must be a positive multiple of 32 hex characters");
  std::vector<std::uint8_t> data = hex_decode(hex_cipher);

  for (std::size_t off = 0; off < data.size(); off += kBlockSize)
    decrypt_block(data.data() + off, key, data.data() + off);

  const std::uint8_t pad = data.back();
  if (pad < 1 || pad > kBlockSize || pad >= data.size())
    raise(ErrorKind::InvalidPadding, "wrong key or corrupted cipher");
  for (std::size_t i = data.size() - pad; i < data.size(); ++i)
    if (data[i] != pad)
      raise(ErrorKind::InvalidPadding, "wrong key or corrupted cipher");

  return std::string(data.begin(), data.end() - pad);
}

}  // namespace stegodct
