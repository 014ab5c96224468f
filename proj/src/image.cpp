#include "stegodct/image.hpp"

#include "stegodct/error.hpp"

namespace stegodct {

bool is_block_aligned(const GrayImage& img) noexcept {
  return img.width >= 8 && img.height >= 8 && img.width % 8 == 0 &&
         img.height % 8 == 0;
}

GrayImage crop_to_block(const GrayImage& img) {
  if (img.width < 8 || img.height < 8)
    raise(ErrorKind::TooSmall, "image must be at least 8x8 to crop");

  const int w = img.width - img.width % 8;
  const int h = img.height - img.height % 8;
  if (w == img.width && h == img.height) return img;

  GrayImage out;
  out.width = w;
  out.height = h;
  out.pixels.resize(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    const auto* src = img.pixels.data() + static_cast<std::size_t>(y) * img.width;
    std::copy(src, src + w, out.pixels.data() + static_cast<std::size_t>(y) * w);
  }
  return out;
}

}  // namespace stegodct
