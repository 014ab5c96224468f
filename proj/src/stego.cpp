#include "stegodct/stego.hpp"

#include <cmath>
#include <cstdlib>

#include "stegodct/error.hpp"
#include "stegodct/hex.hpp"

namespace stegodct {

namespace {

constexpr int kSeptetLen = 7;

std::size_t site_offset(const CoefficientSite& site, const DctPlane& plane) {
  const auto [zr, zc] = zigzag_position(site.zigzag_index);
  const int row = site.block_row * 8 + zr;
  const int col = site.block_col * 8 + zc;
  if (row < 0 || col < 0 || row >= plane.height || col >= plane.width)
    raise(ErrorKind::PlanPlaneMismatch, "plan site outside the plane");
  return static_cast<std::size_t>(row) * plane.width + col;
}

}  // namespace

ScrambleKey ScrambleKey::from_hex(std::string_view hex16) {
  if (hex16.size() != 16)
    raise(ErrorKind::InvalidArgument,
          "key 2 must be exactly 16 hex characters");
  const auto bytes = hex_decode(hex16);
  ScrambleKey key;
  std::copy(bytes.begin(), bytes.end(), key.bytes.begin());
  return key;
}

PayloadBits scramble(const PayloadSeptet& septet, const ScrambleKey& key) {
  std::uint8_t mixed[kSeptetLen];
  for (int i = 0; i < kSeptetLen; ++i)
    mixed[i] = static_cast<std::uint8_t>(septet.chars[i]) ^ key.bytes[i];

  const int rot = key.bytes[7] % kSeptetLen;
  PayloadBits out;
  for (int i = 0; i < kSeptetLen; ++i)
    out.bytes[i] = mixed[(i + rot) % kSeptetLen];
  return out;
}

PayloadSeptet unscramble(const PayloadBits& bits, const ScrambleKey& key) {
  const int rot = key.bytes[7] % kSeptetLen;
  std::uint8_t mixed[kSeptetLen];
  for (int i = 0; i < kSeptetLen; ++i)
    mixed[(i + rot) % kSeptetLen] = bits.bytes[i];

  PayloadSeptet septet;
  for (int i = 0; i < kSeptetLen; ++i) {
    const char c = static_cast<char>(mixed[i] ^ key.bytes[i]);
    if (!is_hex_letter(c))
      raise(ErrorKind::CharsetViolation,
            "unscrambled byte outside A-F (wrong key 2 or corrupted bits)");
    septet.chars[i] = c;
  }
  return septet;
}

DctPlane embed(const DctPlane& plane, const EmbedPlan& plan,
               const PayloadBits& bits) {
  if (plan.sites.size() != kSiteCount)
    raise(ErrorKind::InvalidArgument, "plan must hold exactly 56 sites");

  DctPlane out = plane;
  for (int i = 0; i < kSiteCount; ++i) {
    const CoefficientSite& site = plan.sites[static_cast<std::size_t>(i)];
    const std::size_t off = site_offset(site, plane);
    if (plane.coeffs[off] != site.value)
      raise(ErrorKind::PlanPlaneMismatch,
            "site value disagrees with the plane (plan from another image?)");
    out.coeffs[off] = bits.bit(i) ? site.value + plan.d : site.value - plan.d;
  }
  return out;
}

ExtractResult extract(const DctPlane& original, const DctPlane& stego,
                      const EmbedPlan& plan) {
  if (original.width != stego.width || original.height != stego.height)
    raise(ErrorKind::DimensionMismatch,
          "original and stego planes differ in size");
  if (plan.sites.size() != kSiteCount)
    raise(ErrorKind::InvalidArgument, "plan must hold exactly 56 sites");

  ExtractResult result;
  for (int i = 0; i < kSiteCount; ++i) {
    const std::size_t off =
        site_offset(plan.sites[static_cast<std::size_t>(i)], original);
    const double diff = stego.coeffs[off] - original.coeffs[off];
    result.bits.set_bit(i, diff > 0.0);
    if (std::abs(diff) < plan.d / 2.0) result.weak_sites.push_back(i);
  }
  return result;
}

}  // namespace stegodct
