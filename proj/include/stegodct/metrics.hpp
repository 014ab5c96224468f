#pragma once

#include "stegodct/image.hpp"
#include "stegodct/stego.hpp"

namespace stegodct {

struct QualityReport {
  double mse = 0.0;
  // 10*log10(255^2/mse); +infinity when the images are identical.
  double psnr_db = 0.0;
  long long changed_pixels = 0;
};

QualityReport psnr(const GrayImage& a, const GrayImage& b);

// Bit error rate over the 56 payload bits: Hamming distance / 56.
double ber(const PayloadBits& sent, const PayloadBits& received);

}  // namespace stegodct
