#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "vscan/errors.hpp"

namespace vscan {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Interleaved 8-bit RGB raster, row-major.
struct ImageRgb {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  ImageRgb() = default;
  ImageRgb(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

  static ImageRgb filled(int w, int h, Rgb color) {
    ImageRgb img(w, h);
    for (int i = 0; i < w * h; ++i) {
      img.data[3 * i + 0] = color.r;
      img.data[3 * i + 1] = color.g;
      img.data[3 * i + 2] = color.b;
    }
    return img;
  }

  bool empty() const { return width <= 0 || height <= 0 || data.empty(); }

  Rgb at(int x, int y) const {
    const std::size_t off = (static_cast<std::size_t>(y) * width + x) * 3;
    return Rgb{data[off], data[off + 1], data[off + 2]};
  }

  void set(int x, int y, Rgb color) {
    const std::size_t off = (static_cast<std::size_t>(y) * width + x) * 3;
    data[off] = color.r;
    data[off + 1] = color.g;
    data[off + 2] = color.b;
  }

  friend bool operator==(const ImageRgb&, const ImageRgb&) = default;
};

namespace detail {

// Resamples one scanline. Box (area-average) when shrinking, bilinear when
// growing; length-preserving resample reduces to the identity.
inline void resample_line(const double* src, int n, double* dst, int m, int stride_src,
                          int stride_dst) {
  if (n >= m) {
    const double scale = static_cast<double>(n) / m;
    for (int k = 0; k < m; ++k) {
      const double x0 = k * scale;
      const double x1 = x0 + scale;
      double acc = 0.0;
      double total = 0.0;
      int i0 = static_cast<int>(std::floor(x0));
      int i1 = static_cast<int>(std::ceil(x1));
      i1 = std::min(i1, n);
      for (int i = i0; i < i1; ++i) {
        const double lo = std::max(x0, static_cast<double>(i));
        const double hi = std::min(x1, static_cast<double>(i + 1));
        const double w = hi - lo;
        if (w <= 0.0) continue;
        acc += w * src[i * stride_src];
        total += w;
      }
      dst[k * stride_dst] = acc / total;
    }
  } else {
    const double scale = static_cast<double>(n) / m;
    for (int k = 0; k < m; ++k) {
      double x = (k + 0.5) * scale - 0.5;
      x = std::clamp(x, 0.0, static_cast<double>(n - 1));
      const int i0 = static_cast<int>(std::floor(x));
      const int i1 = std::min(i0 + 1, n - 1);
      const double t = x - i0;
      dst[k * stride_dst] = (1.0 - t) * src[i0 * stride_src] + t * src[i1 * stride_src];
    }
  }
}

}  // namespace detail

// Separable resize: area averaging along axes that shrink, bilinear along
// axes that grow. Constant images stay constant under either filter.
inline ImageRgb resize_image(const ImageRgb& src, int out_w, int out_h) {
  if (src.empty()) raise(ErrorCode::ShapeError, "cannot resize an empty image");
  if (out_w <= 0 || out_h <= 0) raise(ErrorCode::ShapeError, "target size must be positive");
  if (src.width == out_w && src.height == out_h) return src;

  const int w = src.width;
  const int h = src.height;
  ImageRgb out(out_w, out_h);

  std::vector<double> plane(static_cast<std::size_t>(w) * h);
  std::vector<double> mid(static_cast<std::size_t>(out_w) * h);
  std::vector<double> fin(static_cast<std::size_t>(out_w) * out_h);
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        plane[static_cast<std::size_t>(y) * w + x] =
            src.data[(static_cast<std::size_t>(y) * w + x) * 3 + c];
      }
    }
    for (int y = 0; y < h; ++y) {
      detail::resample_line(&plane[static_cast<std::size_t>(y) * w], w,
                            &mid[static_cast<std::size_t>(y) * out_w], out_w, 1, 1);
    }
    for (int x = 0; x < out_w; ++x) {
      detail::resample_line(&mid[x], h, &fin[x], out_h, out_w, out_w);
    }
    for (int i = 0; i < out_w * out_h; ++i) {
      const double v = std::clamp(fin[i], 0.0, 255.0);
      out.data[static_cast<std::size_t>(i) * 3 + c] =
          static_cast<std::uint8_t>(std::lround(v));
    }
  }
  return out;
}

}  // namespace vscan
