#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "vscan/image.hpp"

namespace vscan {

// h in [0, 360), s and v in [0, 1]. h is 0 for achromatic pixels.
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

inline Hsv rgb_to_hsv(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  const double r = r8 / 255.0;
  const double g = g8 / 255.0;
  const double b = b8 / 255.0;
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double delta = mx - mn;

  Hsv out;
  out.v = mx;
  out.s = (mx > 0.0) ? delta / mx : 0.0;
  if (delta > 0.0) {
    if (mx == r) {
      out.h = 60.0 * ((g - b) / delta);
    } else if (mx == g) {
      out.h = 60.0 * ((b - r) / delta + 2.0);
    } else {
      out.h = 60.0 * ((r - g) / delta + 4.0);
    }
    if (out.h < 0.0) out.h += 360.0;
    if (out.h >= 360.0) out.h -= 360.0;
  }
  return out;
}

inline Hsv rgb_to_hsv(Rgb px) { return rgb_to_hsv(px.r, px.g, px.b); }

// Inverse hexcone conversion; used by fixture generators and tooling.
inline Rgb hsv_to_rgb(double h, double s, double v) {
  h = std::fmod(h, 360.0);
  if (h < 0.0) h += 360.0;
  s = std::clamp(s, 0.0, 1.0);
  v = std::clamp(v, 0.0, 1.0);

  const double c = v * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0.0, g = 0.0, b = 0.0;
  switch (static_cast<int>(hp)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double m = v - c;
  const auto to8 = [](double u) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(u, 0.0, 1.0) * 255.0));
  };
  return Rgb{to8(r + m), to8(g + m), to8(b + m)};
}

}  // namespace vscan
