// Deterministic cover images for the test and acceptance suites: a handful
// of photographic-style 512x512 covers (smooth shading, blobs, mid-band
// texture) plus uniform-noise covers.

#pragma once

#include <cstdint>
#include <vector>

#include "stegodct/image.hpp"
#include "stegodct/stego.hpp"

namespace testsupport {

stegodct::GrayImage make_natural_cover(std::uint32_t seed, int width = 512,
                                       int height = 512);
stegodct::GrayImage make_noise_cover(std::uint32_t seed, int width = 512,
                                     int height = 512);

// The acceptance corpus: 5 natural-style covers then 20 noise covers,
// all 512x512.
std::vector<stegodct::GrayImage> acceptance_corpus();

// Deterministic pseudo-random 56-bit payload.
stegodct::PayloadBits random_payload(std::uint32_t seed);

// Worst post-rounding bit error rate across the given covers for one
// persistence factor (threshold fixed at 2*d): embed a pseudo-random
// payload, round to pixels, re-transform, extract, compare. Returns 1.0
// when a cover lacks capacity at that threshold.
double worst_ber_for(const std::vector<stegodct::GrayImage>& covers, double d);

}  // namespace testsupport
