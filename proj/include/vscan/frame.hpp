#pragma once

#include <string>
#include <vector>

#include "vscan/image.hpp"
#include "vscan/rational.hpp"

namespace vscan {

// One pre-sampled video frame. `index` is the position in the sampled
// sequence, `source_second` the second of the source video it represents.
struct Frame {
  int index = 0;
  int source_second = 0;
  ImageRgb pixels;
};

struct FrameSequence {
  std::vector<Frame> frames;
  Rational source_fps{1, 1};
  std::string source_id;

  std::size_t size() const { return frames.size(); }
  bool empty() const { return frames.empty(); }
};

}  // namespace vscan
