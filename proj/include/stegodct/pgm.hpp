#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "stegodct/image.hpp"

namespace stegodct {

// Binary PGM (P5), maxval 255. Saving always emits the canonical header
// "P5\n<width> <height>\n255\n" followed by the raw rows, so identical
// images produce identical files.

GrayImage decode_pgm(std::string_view bytes);
std::string encode_pgm(const GrayImage& img);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

}  // namespace stegodct
