#include "stegodct/dct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <tuple>

#include "stegodct/error.hpp"

namespace stegodct {

namespace {

constexpr int kN = 8;

// Orthonormal DCT-II basis: C[k][n] = s(k) * cos((2n+1) k pi / 16),
// s(0) = sqrt(1/8), s(k>0) = sqrt(2/8).
const std::array<std::array<double, kN>, kN>& dct_matrix() {
  static const auto matrix = [] {
    std::array<std::array<double, kN>, kN> c{};
    for (int k = 0; k < kN; ++k) {
      const double s = k == 0 ? std::sqrt(1.0 / kN) : std::sqrt(2.0 / kN);
      for (int n = 0; n < kN; ++n)
        c[k][n] = s * std::cos((2 * n + 1) * k * std::numbers::pi / (2 * kN));
    }
    return c;
  }();
  return matrix;
}

// JPEG zigzag scan: walk the anti-diagonals, alternating direction.
const std::array<std::pair<int, int>, 64>& zigzag_table() {
  static const auto table = [] {
    std::array<std::pair<int, int>, 64> t{};
    int r = 0, c = 0;
    for (int i = 0; i < 64; ++i) {
      t[i] = {r, c};
      if ((r + c) % 2 == 0) {  // moving up-right
        if (c == kN - 1)
          ++r;
        else if (r == 0)
          ++c;
        else {
          --r;
          ++c;
        }
      } else {  // moving down-left
        if (r == kN - 1)
          ++c;
        else if (c == 0)
          ++r;
        else {
          ++r;
          --c;
        }
      }
    }
    return t;
  }();
  return table;
}

void require_block_dims(int width, int height) {
  if (width < kN || height < kN || width % kN != 0 || height % kN != 0)
    raise(ErrorKind::DimensionNotMultipleOf8,
          "dimensions must be multiples of 8, got " + std::to_string(width) +
              "x" + std::to_string(height));
}

// out = C * in * C^T over one 8x8 block (forward), or C^T * in * C
// (inverse), both reading/writing strided row-major storage.
template <bool Forward>
void transform_block(const double* in, double* out, int stride) {
  const auto& c = dct_matrix();
  double mid[kN][kN];
  for (int k = 0; k < kN; ++k) {
    for (int col = 0; col < kN; ++col) {
      double acc = 0.0;
      for (int r = 0; r < kN; ++r)
        acc += (Forward ? c[k][r] : c[r][k]) * in[r * stride + col];
      mid[k][col] = acc;
    }
  }
  for (int r = 0; r < kN; ++r) {
    for (int k = 0; k < kN; ++k) {
      double acc = 0.0;
      for (int col = 0; col < kN; ++col)
        acc += mid[r][col] * (Forward ? c[k][col] : c[col][k]);
      out[r * stride + k] = acc;
    }
  }
}

}  // namespace

std::pair<int, int> zigzag_position(int index) {
  return zigzag_table()[static_cast<std::size_t>(index)];
}

DctPlane forward_dct(const GrayImage& img) {
  require_block_dims(img.width, img.height);

  DctPlane plane;
  plane.width = img.width;
  plane.height = img.height;
  plane.coeffs.resize(img.size());

  std::vector<double> values(img.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    values[i] = static_cast<double>(img.pixels[i]);

  for (int by = 0; by < img.height; by += kN)
    for (int bx = 0; bx < img.width; bx += kN) {
      const std::size_t off = static_cast<std::size_t>(by) * img.width + bx;
      transform_block<true>(values.data() + off, plane.coeffs.data() + off,
                            img.width);
    }
  return plane;
}

std::vector<double> inverse_dct_values(const DctPlane& plane) {
  require_block_dims(plane.width, plane.height);
  for (double v : plane.coeffs)
    if (!std::isfinite(v))
      raise(ErrorKind::NonFiniteCoefficient,
            "plane contains a non-finite coefficient");

  std::vector<double> values(plane.coeffs.size());
  for (int by = 0; by < plane.height; by += kN)
    for (int bx = 0; bx < plane.width; bx += kN) {
      const std::size_t off = static_cast<std::size_t>(by) * plane.width + bx;
      transform_block<false>(plane.coeffs.data() + off, values.data() + off,
                             plane.width);
    }
  return values;
}

GrayImage inverse_dct(const DctPlane& plane) {
  const std::vector<double> values = inverse_dct_values(plane);
  GrayImage img;
  img.width = plane.width;
  img.height = plane.height;
  img.pixels.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = std::round(values[i]);
    img.pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  }
  return img;
}

EmbedPlan select_sites(const DctPlane& plane, double t, double d) {
  if (!(t > 0.0)) raise(ErrorKind::InvalidArgument, "threshold must be > 0");
  if (!(d > 0.0))
    raise(ErrorKind::InvalidArgument, "persistence factor must be > 0");
  require_block_dims(plane.width, plane.height);

  std::vector<CoefficientSite> sites;
  for (int br = 0; br < plane.height / kN; ++br)
    for (int bc = 0; bc < plane.width / kN; ++bc)
      for (int zz = kBandLow; zz <= kBandHigh; ++zz) {
        const auto [zr, zc] = zigzag_position(zz);
        const double v =
            plane.coeffs[static_cast<std::size_t>(br * kN + zr) * plane.width +
                         bc * kN + zc];
        if (v > t) sites.push_back({br, bc, zz, v});
      }

  if (sites.size() < kSiteCount)
    raise(ErrorKind::InsufficientCapacity,
          "only " + std::to_string(sites.size()) + " coefficients above " +
              "threshold; need 56 (image too small, too dark, or t too high)");

  std::sort(sites.begin(), sites.end(),
            [](const CoefficientSite& a, const CoefficientSite& b) {
              if (a.value != b.value) return a.value > b.value;
              return std::tie(a.block_row, a.block_col, a.zigzag_index) <
                     std::tie(b.block_row, b.block_col, b.zigzag_index);
            });
  sites.resize(kSiteCount);

  return EmbedPlan{std::move(sites), d, t};
}

}  // namespace stegodct
