#pragma once

#include <array>

#include "vscan/color.hpp"
#include "vscan/errors.hpp"
#include "vscan/frame.hpp"
#include "vscan/wavelet.hpp"

namespace vscan {

inline constexpr int kTextureEdge = 64;
inline constexpr int kTextureLevels = 3;
inline constexpr int kApproxEdge = 8;                              // 64 / 2^3
inline constexpr int kTextureDim = 3 * kApproxEdge * kApproxEdge;  // 192

// Level-3 Haar approximation coefficients of the H, S and V planes of the
// 64x64 frame, concatenated channel-major and L1-normalized. Entries are
// non-negative: the low-pass chain never produces a negative value from
// non-negative channels.
struct TextureVector {
  int frame_index = -1;
  std::array<double, kTextureDim> coeffs{};
};

inline ImageRgb resize_64(const Frame& frame) {
  if (frame.pixels.empty()) raise(ErrorCode::ShapeError, "frame raster is empty");
  return resize_image(frame.pixels, kTextureEdge, kTextureEdge);
}

// HSV planes of a 64x64 raster, each scaled to [0, 1] (hue divided by 360).
inline std::array<DGrid, 3> hsv_planes(const ImageRgb& img) {
  if (img.width != kTextureEdge || img.height != kTextureEdge) {
    raise(ErrorCode::ShapeError, "hsv_planes expects a 64x64 raster");
  }
  std::array<DGrid, 3> planes{DGrid(kTextureEdge, kTextureEdge),
                              DGrid(kTextureEdge, kTextureEdge),
                              DGrid(kTextureEdge, kTextureEdge)};
  for (int y = 0; y < kTextureEdge; ++y) {
    for (int x = 0; x < kTextureEdge; ++x) {
      const Hsv hsv = rgb_to_hsv(img.at(x, y));
      planes[0].at(x, y) = hsv.h / 360.0;
      planes[1].at(x, y) = hsv.s;
      planes[2].at(x, y) = hsv.v;
    }
  }
  return planes;
}

// Unnormalized 192-entry concatenation H || S || V of the approximation bands.
inline std::array<double, kTextureDim> texture_raw(const std::array<DGrid, 3>& planes) {
  std::array<double, kTextureDim> raw{};
  for (int c = 0; c < 3; ++c) {
    const DGrid band = haar2d_approx(planes[c], kTextureLevels);
    for (int y = 0; y < kApproxEdge; ++y) {
      for (int x = 0; x < kApproxEdge; ++x) {
        raw[c * kApproxEdge * kApproxEdge + y * kApproxEdge + x] = band.at(x, y);
      }
    }
  }
  return raw;
}

inline TextureVector texture_vector(const Frame& frame) {
  TextureVector vec;
  vec.frame_index = frame.index;
  vec.coeffs = texture_raw(hsv_planes(resize_64(frame)));

  double sum = 0.0;
  for (double c : vec.coeffs) sum += c;
  if (sum > 0.0) {
    for (double& c : vec.coeffs) c /= sum;
  } else {
    // Pure black frame: h = s = v = 0 everywhere. Defined as the uniform
    // distribution so the similarity kernel stays total.
    for (double& c : vec.coeffs) c = 1.0 / kTextureDim;
  }
  return vec;
}

}  // namespace vscan
