#include "stegodct/security.hpp"

#include <algorithm>

#include "stegodct/error.hpp"
#include "stegodct/hex.hpp"

namespace stegodct {

namespace {

constexpr int kSeptetLen = 7;
constexpr char kPadChar = 'A';

void check_septet_charset(const PayloadSeptet& septet) {
  for (char c : septet.chars)
    if (!is_hex_letter(c))
      raise(ErrorKind::CharsetViolation,
            "septet character outside A-F");
}

}  // namespace

SplitResult split(std::string_view cipher) {
  if (cipher.empty())
    raise(ErrorKind::MalformedHex, "cipher must not be empty");

  SplitResult out;
  out.key3.mask.reserve(cipher.size());
  std::string letters;
  std::string digits;
  for (char c : cipher) {
    if (is_hex_letter(c)) {
      letters += c;
      out.key3.mask += '1';
    } else if (is_decimal_digit(c)) {
      digits += c;
      out.key3.mask += '0';
    } else {
      raise(ErrorKind::MalformedHex, "cipher must be uppercase hex");
    }
  }

  const int letter_count = static_cast<int>(letters.size());
  const int used = std::min(letter_count, kSeptetLen);
  for (int i = 0; i < used; ++i) out.septet.chars[i] = letters[i];
  for (int i = used; i < kSeptetLen; ++i) out.septet.chars[i] = kPadChar;
  out.key4.pad_count = kSeptetLen - used;

  out.key4.text = digits;
  if (letter_count > kSeptetLen)
    out.key4.text.append(letters, kSeptetLen, std::string::npos);
  return out;
}

std::string merge(const PayloadSeptet& septet, const PositionKey& key3,
                  const RemainderKey& key4) {
  check_septet_charset(septet);
  if (key4.pad_count < 0 || key4.pad_count > kSeptetLen)
    raise(ErrorKind::LengthMismatch, "pad count out of range 0..7");

  int letter_slots = 0;
  for (char c : key3.mask) {
    if (c == '1')
      ++letter_slots;
    else if (c != '0')
      raise(ErrorKind::CharsetViolation, "key 3 mask must be 0/1 bits");
  }
  const int digit_slots = static_cast<int>(key3.mask.size()) - letter_slots;

  // Letters come from the septet (minus its pad tail) and then from key4's
  // letter tail; the tail length is fully determined by key3.
  const int septet_letters = kSeptetLen - key4.pad_count;
  const int tail_letters = letter_slots - septet_letters;
  if (tail_letters < 0)
    raise(ErrorKind::LengthMismatch,
          "key 3 letter count below the unpadded septet length");
  if (key4.pad_count > 0 && tail_letters != 0)
    raise(ErrorKind::LengthMismatch,
          "padded septet cannot coexist with a key 4 letter tail");
  if (static_cast<int>(key4.text.size()) != digit_slots + tail_letters)
    raise(ErrorKind::LengthMismatch,
          "key 4 length inconsistent with key 3 mask");

  const std::string_view digits =
      std::string_view(key4.text).substr(0, digit_slots);
  const std::string_view tail =
      std::string_view(key4.text).substr(digit_slots);
  for (char c : digits)
    if (!is_decimal_digit(c))
      raise(ErrorKind::CharsetViolation, "letter in key 4 digit segment");
  for (char c : tail)
    if (!is_hex_letter(c))
      raise(ErrorKind::CharsetViolation, "digit in key 4 letter tail");

  std::string cipher;
  cipher.reserve(key3.mask.size());
  int li = 0;
  int di = 0;
  for (char bit : key3.mask) {
    if (bit == '1') {
      cipher += li < septet_letters ? septet.chars[li]
                                    : tail[li - septet_letters];
      ++li;
    } else {
      cipher += digits[di++];
    }
  }
  return cipher;
}

}  // namespace stegodct
