#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stegodct {

// 8-bit grayscale raster, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::size_t size() const noexcept { return pixels.size(); }
  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
};

// The DCT path only accepts dimensions that are multiples of 8.
bool is_block_aligned(const GrayImage& img) noexcept;

// Truncates the right/bottom edges so both dimensions become multiples of 8,
// anchored at the top-left pixel. Raises TooSmall when either dimension is
// below 8.
GrayImage crop_to_block(const GrayImage& img);

}  // namespace stegodct
