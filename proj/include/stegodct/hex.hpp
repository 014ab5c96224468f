#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stegodct {

inline bool is_hex_letter(char c) noexcept { return c >= 'A' && c <= 'F'; }
inline bool is_decimal_digit(char c) noexcept { return c >= '0' && c <= '9'; }
inline bool is_upper_hex(char c) noexcept {
  return is_decimal_digit(c) || is_hex_letter(c);
}

// Uppercase hex string, two characters per byte.
std::string hex_encode(std::span<const std::uint8_t> bytes);

// Case-insensitive decode. Raises MalformedHex on odd length or stray
// characters.
std::vector<std::uint8_t> hex_decode(std::string_view text);

}  // namespace stegodct
