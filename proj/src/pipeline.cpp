#include "stegodct/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "stegodct/dct.hpp"
#include "stegodct/error.hpp"
#include "stegodct/hex.hpp"

namespace stegodct {

namespace {

template <class F>
decltype(auto) stage(const char* name, F&& fn) {
  try {
    return std::forward<F>(fn)();
  } catch (Error& e) {
    e.set_stage(name);
    throw;
  }
}

void check_factors(double d, double t) {
  if (!(d > 0.0))
    raise(ErrorKind::InvalidArgument, "persistence factor d must be > 0");
  if (!(t >= d)) raise(ErrorKind::InvalidArgument, "threshold t must be >= d");
}

// One "NAME=value\n" line; the parser is strict so key files round-trip
// byte-exactly.
std::string_view take_line(std::string_view& rest, std::string_view name) {
  const std::size_t nl = rest.find('\n');
  if (nl == std::string_view::npos)
    raise(ErrorKind::KeyfileMalformed,
          "missing line " + std::string(name) + "=...");
  std::string_view line = rest.substr(0, nl);
  rest.remove_prefix(nl + 1);
  if (line.size() < name.size() + 1 || !line.starts_with(name) ||
      line[name.size()] != '=')
    raise(ErrorKind::KeyfileMalformed,
          "expected line " + std::string(name) + "=...");
  return line.substr(name.size() + 1);
}

double parse_decimal(std::string_view text, std::string_view name) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value))
    raise(ErrorKind::KeyfileMalformed,
          "bad decimal in " + std::string(name) + " line");
  return value;
}

}  // namespace

std::string format_decimal(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string serialize_key_file(const KeyFile& keys) {
  std::string out;
  out += "KEY3=" + keys.key3.mask + "\n";
  out += "KEY4=" + keys.key4.text + "\n";
  out += "PAD=" + std::to_string(keys.key4.pad_count) + "\n";
  out += "D=" + format_decimal(keys.d) + "\n";
  out += "T=" + format_decimal(keys.t) + "\n";
  return out;
}

KeyFile parse_key_file(std::string_view text) {
  KeyFile keys;
  std::string_view rest = text;

  const std::string_view mask = take_line(rest, "KEY3");
  for (char c : mask)
    if (c != '0' && c != '1')
      raise(ErrorKind::KeyfileMalformed, "KEY3 must be a 0/1 bitstring");
  keys.key3.mask = mask;

  const std::string_view key4 = take_line(rest, "KEY4");
  for (char c : key4)
    if (!is_upper_hex(c))
      raise(ErrorKind::KeyfileMalformed,
            "KEY4 must use the uppercase hex charset");
  keys.key4.text = key4;

  const std::string_view pad = take_line(rest, "PAD");
  if (pad.size() != 1 || pad[0] < '0' || pad[0] > '7')
    raise(ErrorKind::KeyfileMalformed, "PAD must be a digit 0..7");
  keys.key4.pad_count = pad[0] - '0';

  keys.d = parse_decimal(take_line(rest, "D"), "D");
  keys.t = parse_decimal(take_line(rest, "T"), "T");
  if (!rest.empty())
    raise(ErrorKind::KeyfileMalformed, "trailing bytes after T line");
  check_factors(keys.d, keys.t);
  return keys;
}

HideResult hide_message(std::string_view plaintext, const GrayImage& cover,
                        const AesKey& key1, const ScrambleKey& key2, double d,
                        double t) {
  check_factors(d, t);

  const std::string cipher =
      stage("encrypt", [&] { return encrypt(plaintext, key1); });
  const SplitResult parts = stage("split", [&] { return split(cipher); });
  const PayloadBits bits =
      stage("scramble", [&] { return scramble(parts.septet, key2); });

  const DctPlane plane =
      stage("forward-dct", [&] { return forward_dct(cover); });
  const EmbedPlan plan =
      stage("select-sites", [&] { return select_sites(plane, t, d); });
  const DctPlane embedded =
      stage("embed", [&] { return embed(plane, plan, bits); });

  HideResult result;
  result.stego = stage("inverse-dct", [&] { return inverse_dct(embedded); });
  result.keys = KeyFile{parts.key3, parts.key4, d, t};
  result.quality = psnr(cover, result.stego);
  return result;
}

RevealResult reveal_message(const GrayImage& stego, const GrayImage& cover,
                            const AesKey& key1, const ScrambleKey& key2,
                            const KeyFile& keys) {
  check_factors(keys.d, keys.t);
  if (stego.width != cover.width || stego.height != cover.height)
    raise(ErrorKind::DimensionMismatch,
          "stego and cover images differ in size");

  const DctPlane cover_plane =
      stage("forward-dct", [&] { return forward_dct(cover); });
  const DctPlane stego_plane =
      stage("forward-dct", [&] { return forward_dct(stego); });

  // Recomputing the selection on the cover plane reproduces the exact plan
  // the hiding run used.
  const EmbedPlan plan = stage(
      "select-sites", [&] { return select_sites(cover_plane, keys.t, keys.d); });
  ExtractResult extracted = stage(
      "extract", [&] { return extract(cover_plane, stego_plane, plan); });

  const PayloadSeptet septet =
      stage("unscramble", [&] { return unscramble(extracted.bits, key2); });
  const std::string cipher =
      stage("merge", [&] { return merge(septet, keys.key3, keys.key4); });

  RevealResult result;
  result.plaintext = stage("decrypt", [&] { return decrypt(cipher, key1); });
  result.weak_sites = std::move(extracted.weak_sites);
  return result;
}

}  // namespace stegodct
