#pragma once

#include <atomic>
#include <map>
#include <thread>
#include <vector>

#include "vscan/color_features.hpp"
#include "vscan/errors.hpp"
#include "vscan/frame.hpp"
#include "vscan/similarity.hpp"
#include "vscan/texture_features.hpp"

namespace vscan {

// Per-frame color and texture features keyed by frame index, plus the
// temporal ordering of those indices. Both maps always share one key set.
struct FeatureDatabase {
  std::map<int, ColorHistogram> color;
  std::map<int, TextureVector> texture;
  std::vector<int> order;

  std::size_t size() const { return order.size(); }
  bool contains(int idx) const { return color.count(idx) != 0; }

  void insert(ColorHistogram hist, TextureVector tex) {
    const int idx = hist.frame_index;
    color[idx] = std::move(hist);
    texture[idx] = std::move(tex);
    order.push_back(idx);
  }

  int score(int p, int q, const SimilarityThresholds& th) const {
    return composite_score(p, q, color, texture, th);
  }
};

// Extracts features for every frame. Frames are independent, so extraction
// runs on a bounded pool of worker threads; results land in per-frame slots,
// keeping the output identical regardless of scheduling.
inline FeatureDatabase extract_features(const FrameSequence& seq, unsigned threads = 0) {
  const std::size_t n = seq.size();
  std::vector<ColorHistogram> hists(n);
  std::vector<TextureVector> texs(n);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      hists[i] = color_histogram(seq.frames[i]);
      texs[i] = texture_vector(seq.frames[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          hists[i] = color_histogram(seq.frames[i]);
          texs[i] = texture_vector(seq.frames[i]);
        }
      });
    }
    for (auto& worker : pool) worker.join();
  }

  FeatureDatabase db;
  for (std::size_t i = 0; i < n; ++i) {
    db.insert(std::move(hists[i]), std::move(texs[i]));
  }
  return db;
}

}  // namespace vscan
