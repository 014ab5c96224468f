#pragma once

#include <utility>
#include <vector>

#include "stegodct/image.hpp"

namespace stegodct {

// Embedding-eligible zigzag band: AC coefficients below the high-frequency
// tail. DC (index 0) is never touched.
inline constexpr int kBandLow = 1;
inline constexpr int kBandHigh = 28;

inline constexpr int kSiteCount = 56;

// Coefficients in image layout: coefficient (u,v) of block (br,bc) lives at
// row br*8+u, column bc*8+v. Same dimensions as the source image.
struct DctPlane {
  int width = 0;
  int height = 0;
  std::vector<double> coeffs;
};

// One embedding site inside the plane.
struct CoefficientSite {
  int block_row = 0;
  int block_col = 0;
  int zigzag_index = 0;
  double value = 0.0;
};

// The 56 selected sites, ordered by descending value, ties broken by
// (block_row, block_col, zigzag_index) ascending. d is the persistence
// factor added/subtracted per bit, t the selection threshold.
struct EmbedPlan {
  std::vector<CoefficientSite> sites;
  double d = 0.0;
  double t = 0.0;
};

// (row, col) of a zigzag index within an 8x8 block, JPEG scan order.
std::pair<int, int> zigzag_position(int index);

// Orthonormal 2-D DCT-II applied independently to each 8x8 block.
DctPlane forward_dct(const GrayImage& img);

// Per-block inverse transform; pixel values rounded to nearest and clamped
// to [0,255]. Raises NonFiniteCoefficient when the plane contains NaN/inf.
GrayImage inverse_dct(const DctPlane& plane);

// Same inverse transform before rounding/clamping, row-major doubles.
std::vector<double> inverse_dct_values(const DctPlane& plane);

// Pools every coefficient with zigzag index in [kBandLow, kBandHigh] and
// value > t across all blocks and returns the 56 largest as the plan.
// Deterministic: equal planes yield equal plans. Raises
// InsufficientCapacity when fewer than 56 coefficients qualify.
EmbedPlan select_sites(const DctPlane& plane, double t, double d);

}  // namespace stegodct
