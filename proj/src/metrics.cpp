#include "stegodct/metrics.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "stegodct/error.hpp"

namespace stegodct {

QualityReport psnr(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height)
    raise(ErrorKind::DimensionMismatch, "images differ in size");

  QualityReport report;
  double sse = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double diff =
        static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
    sse += diff * diff;
    if (a.pixels[i] != b.pixels[i]) ++report.changed_pixels;
  }
  report.mse = sse / static_cast<double>(a.pixels.size());
  report.psnr_db = report.mse > 0.0
                       ? 10.0 * std::log10(255.0 * 255.0 / report.mse)
                       : std::numeric_limits<double>::infinity();
  return report;
}

double ber(const PayloadBits& sent, const PayloadBits& received) {
  int errors = 0;
  for (std::size_t i = 0; i < sent.bytes.size(); ++i)
    errors += std::popcount(
        static_cast<unsigned>(sent.bytes[i] ^ received.bytes[i]));
  return static_cast<double>(errors) / 56.0;
}

}  // namespace stegodct
