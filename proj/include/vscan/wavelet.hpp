#pragma once

#include <cmath>
#include <vector>

#include "vscan/errors.hpp"

namespace vscan {

// Small row-major double matrix used for wavelet planes.
struct DGrid {
  int width = 0;
  int height = 0;
  std::vector<double> v;

  DGrid() = default;
  DGrid(int w, int h) : width(w), height(h), v(static_cast<std::size_t>(w) * h, 0.0) {}

  double& at(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const DGrid&, const DGrid&) = default;
};

// One level of the orthonormal 2D Haar analysis. Output layout is the usual
// quadrant arrangement: approximation (LL) top-left, HL top-right, LH
// bottom-left, HH bottom-right. The transform is orthogonal, so it conserves
// L2 energy exactly.
inline DGrid haar2d_step(const DGrid& in) {
  if (in.width <= 0 || in.height <= 0 || in.width % 2 != 0 || in.height % 2 != 0) {
    raise(ErrorCode::ShapeError, "haar2d_step requires even, non-empty dimensions");
  }
  const double sqrt2 = std::sqrt(2.0);
  const int w = in.width;
  const int h = in.height;

  DGrid rows(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w / 2; ++x) {
      const double a = in.at(2 * x, y);
      const double b = in.at(2 * x + 1, y);
      rows.at(x, y) = (a + b) / sqrt2;
      rows.at(w / 2 + x, y) = (a - b) / sqrt2;
    }
  }

  DGrid out(w, h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h / 2; ++y) {
      const double a = rows.at(x, 2 * y);
      const double b = rows.at(x, 2 * y + 1);
      out.at(x, y) = (a + b) / sqrt2;
      out.at(x, h / 2 + y) = (a - b) / sqrt2;
    }
  }
  return out;
}

// Recursive approximation band of a 64x64 plane. With the orthonormal
// convention a constant plane c comes out as the constant 2^levels * c.
inline DGrid haar2d_approx(const DGrid& channel, int levels = 3) {
  if (channel.width != 64 || channel.height != 64) {
    raise(ErrorCode::ShapeError, "haar2d_approx expects a 64x64 input");
  }
  if (levels < 1 || levels > 6) {
    raise(ErrorCode::ShapeError, "decomposition level out of range");
  }
  DGrid approx = channel;
  for (int level = 0; level < levels; ++level) {
    const DGrid full = haar2d_step(approx);
    DGrid half(full.width / 2, full.height / 2);
    for (int y = 0; y < half.height; ++y) {
      for (int x = 0; x < half.width; ++x) {
        half.at(x, y) = full.at(x, y);
      }
    }
    approx = std::move(half);
  }
  return approx;
}

}  // namespace vscan
