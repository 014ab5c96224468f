#include "stegodct/hex.hpp"

#include "stegodct/error.hpp"

namespace stegodct {

namespace {

int nibble_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string hex_encode(std::span<const std::uint8_t> bytes) {
  static const char digits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 0x0F];
  }
  return out;
}

std::vector<std::uint8_t> hex_decode(std::string_view text) {
  if (text.size() % 2 != 0)
    raise(ErrorKind::MalformedHex, "hex string has odd length");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const int hi = nibble_value(text[i]);
    const int lo = nibble_value(text[i + 1]);
    if (hi < 0 || lo < 0)
      raise(ErrorKind::MalformedHex, "non-hex character in input");
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace stegodct
