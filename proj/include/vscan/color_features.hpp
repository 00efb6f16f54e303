#pragma once

#include <array>
#include <cstdint>

#include "vscan/color.hpp"
#include "vscan/errors.hpp"
#include "vscan/frame.hpp"

namespace vscan {

inline constexpr int kHueBins = 32;
inline constexpr int kSatBins = 4;
inline constexpr int kValBins = 2;
inline constexpr int kColorBins = kHueBins * kSatBins * kValBins;  // 256

// Joint 32x4x2 HSV histogram, L1-normalized so it can be fed straight into
// the Bhattacharyya coefficient.
struct ColorHistogram {
  int frame_index = -1;
  std::array<double, kColorBins> bins{};
};

// Flattened joint bin index. s = 1 and v = 1 land in the top bin; a hue of
// exactly 360 folds to bin 0 (cannot occur for rgb_to_hsv output, which is
// already in [0, 360)).
inline int color_bin_index(const Hsv& hsv) {
  int h = static_cast<int>(hsv.h * (kHueBins / 360.0));
  if (h >= kHueBins) h = 0;
  int s = static_cast<int>(hsv.s * kSatBins);
  if (s >= kSatBins) s = kSatBins - 1;
  int v = static_cast<int>(hsv.v * kValBins);
  if (v >= kValBins) v = kValBins - 1;
  return (h * kSatBins + s) * kValBins + v;
}

inline ColorHistogram color_histogram(const Frame& frame) {
  if (frame.pixels.empty()) raise(ErrorCode::ShapeError, "frame raster is empty");
  ColorHistogram hist;
  hist.frame_index = frame.index;
  const std::size_t npix = static_cast<std::size_t>(frame.pixels.width) * frame.pixels.height;
  const std::uint8_t* p = frame.pixels.data.data();
  for (std::size_t i = 0; i < npix; ++i, p += 3) {
    hist.bins[color_bin_index(rgb_to_hsv(p[0], p[1], p[2]))] += 1.0;
  }
  const double inv = 1.0 / static_cast<double>(npix);
  for (double& b : hist.bins) b *= inv;
  return hist;
}

}  // namespace vscan
