#include "stegodct/pgm.hpp"

#include <fstream>
#include <sstream>

#include "stegodct/error.hpp"

namespace stegodct {

namespace {

bool is_pgm_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

// Header tokens may be separated by whitespace and '#' comments.
struct HeaderScanner {
  std::string_view data;
  std::size_t pos = 0;

  void skip_separators() {
    while (pos < data.size()) {
      if (is_pgm_space(data[pos])) {
        ++pos;
      } else if (data[pos] == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  long next_int() {
    skip_separators();
    if (pos >= data.size() || data[pos] < '0' || data[pos] > '9')
      raise(ErrorKind::BadMagic, "malformed PGM header");
    long value = 0;
    while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
      value = value * 10 + (data[pos] - '0');
      if (value > 1 << 20) raise(ErrorKind::BadMagic, "PGM header value too large");
      ++pos;
    }
    return value;
  }
};

}  // namespace

GrayImage decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
    raise(ErrorKind::BadMagic, "not a binary PGM (P5) file");

  HeaderScanner scan{bytes, 2};
  const long width = scan.next_int();
  const long height = scan.next_int();
  const long maxval = scan.next_int();
  if (width <= 0 || height <= 0)
    raise(ErrorKind::BadMagic, "PGM dimensions must be positive");
  if (maxval != 255)
    raise(ErrorKind::MaxvalNot255, "only maxval 255 is supported");

  // Exactly one whitespace byte separates the header from the raster.
  if (scan.pos >= bytes.size() || !is_pgm_space(bytes[scan.pos]))
    raise(ErrorKind::BadMagic, "missing separator before PGM raster");
  ++scan.pos;

  const std::size_t need = static_cast<std::size_t>(width) * height;
  if (bytes.size() - scan.pos < need)
    raise(ErrorKind::TruncatedData, "PGM raster shorter than declared size");

  GrayImage img;
  img.width = static_cast<int>(width);
  img.height = static_cast<int>(height);
  img.pixels.assign(bytes.begin() + scan.pos, bytes.begin() + scan.pos + need);
  return img;
}

std::string encode_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " +
                    std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.pixels.data()),
             img.pixels.size());
  return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::NotFound, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) raise(ErrorKind::IoFailure, "read failed on " + path.string());
  return decode_pgm(buffer.str());
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::IoFailure, "cannot open " + path.string());
  const std::string bytes = encode_pgm(img);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) raise(ErrorKind::IoFailure, "write failed on " + path.string());
}

}  // namespace stegodct
