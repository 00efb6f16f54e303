#pragma once

// Shared generators for the test suite: synthetic scene frames, random
// feature databases, random score tables, plus temp-dir and subprocess
// helpers for driving the CLI.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vscan/vscan.hpp"

namespace vscan_test {

// --- synthetic frames -------------------------------------------------------

// Solid background with a same-hue checkerboard overlay. Distinct hues land
// in disjoint histogram bins, so frames of different hue families have color
// coefficient 0.
inline vscan::ImageRgb checker_frame(double hue, double bg_v, double cell_v, int cell,
                                     int w = 128, int h = 96) {
  vscan::ImageRgb img = vscan::ImageRgb::filled(w, h, vscan::hsv_to_rgb(hue, 1.0, bg_v));
  const vscan::Rgb dark = vscan::hsv_to_rgb(hue, 1.0, cell_v);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (((x / cell) + (y / cell)) % 2 == 1) img.set(x, y, dark);
    }
  }
  return img;
}

// Scene frame: coarse checkerboard plus a small stamp whose position moves
// with `variant`. The stamp leaves the color histogram untouched (same bin as
// the background) but perturbs the texture features slightly, so frames of
// one scene are near-identical rather than exactly identical.
inline vscan::ImageRgb scene_frame(double hue, int variant) {
  vscan::ImageRgb img = checker_frame(hue, 1.0, 0.35, 16);
  const vscan::Rgb stamp = vscan::hsv_to_rgb(hue, 1.0, 0.8);
  const int x0 = 8 * (variant % 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = x0; x < x0 + 8; ++x) img.set(x, y, stamp);
  }
  return img;
}

// One-off transition frame in its own hue family; dissimilar in color space
// from every scene and from the other glitch.
inline vscan::ImageRgb glitch_frame(double hue) { return checker_frame(hue, 1.0, 0.5, 4); }

// Scenes at hue 0/120/240 with single glitch frames (hue 60, 300) between
// them, sampled at 1 fps. With the default parameters each scene forms one
// cluster and both glitches end up as noise.
inline vscan::FrameSequence scene_sequence(const std::vector<int>& scene_lengths,
                                           bool with_glitches) {
  const std::array<double, 3> hues{0.0, 120.0, 240.0};
  const std::array<double, 2> glitch_hues{60.0, 300.0};
  if (scene_lengths.size() > hues.size()) throw std::invalid_argument("too many scenes");

  vscan::FrameSequence seq;
  seq.source_id = "synthetic-scenes";
  int idx = 0;
  auto push = [&](vscan::ImageRgb img) {
    seq.frames.push_back(vscan::Frame{idx, idx, std::move(img)});
    ++idx;
  };
  for (std::size_t s = 0; s < scene_lengths.size(); ++s) {
    for (int k = 0; k < scene_lengths[s]; ++k) push(scene_frame(hues[s], k));
    if (with_glitches && s + 1 < scene_lengths.size()) {
      push(glitch_frame(glitch_hues[s]));
    }
  }
  return seq;
}

inline vscan::FrameSequence three_scene_sequence(int scene_len = 25) {
  return scene_sequence({scene_len, scene_len, scene_len}, true);
}

inline void write_frames_png(const vscan::FrameSequence& seq, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  char name[32];
  for (const vscan::Frame& f : seq.frames) {
    std::snprintf(name, sizeof(name), "frame_%06d.png", f.index);
    vscan::save_png(f.pixels, dir / name);
  }
}

// --- random feature data -----------------------------------------------------

template <std::size_t N>
std::array<double, N> random_distribution(std::mt19937& rng) {
  std::exponential_distribution<double> mass(1.0);
  std::array<double, N> out{};
  double sum = 0.0;
  for (double& v : out) {
    v = mass(rng);
    sum += v;
  }
  for (double& v : out) v /= sum;
  return out;
}

template <std::size_t N>
std::array<double, N> mix(const std::array<double, N>& a, const std::array<double, N>& b,
                          double t) {
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
  return out;
}

// Frames scattered around independent color and texture prototypes. Color
// and texture group memberships are drawn separately, so the dual-feature
// relation genuinely refines the color-only one instead of coinciding with
// it. Jitter varies per frame to also produce near-threshold pairs.
inline vscan::FeatureDatabase random_feature_db(std::mt19937& rng, int n_frames,
                                                int n_color_protos = 3, int n_texture_protos = 3,
                                                double max_jitter = 0.15) {
  std::vector<std::array<double, vscan::kColorBins>> color_protos;
  std::vector<std::array<double, vscan::kTextureDim>> texture_protos;
  for (int i = 0; i < n_color_protos; ++i) {
    color_protos.push_back(random_distribution<vscan::kColorBins>(rng));
  }
  for (int i = 0; i < n_texture_protos; ++i) {
    texture_protos.push_back(random_distribution<vscan::kTextureDim>(rng));
  }

  std::uniform_int_distribution<int> pick_color(0, n_color_protos - 1);
  std::uniform_int_distribution<int> pick_texture(0, n_texture_protos - 1);
  std::uniform_real_distribution<double> jitter(0.0, max_jitter);

  vscan::FeatureDatabase db;
  for (int i = 0; i < n_frames; ++i) {
    vscan::ColorHistogram hist;
    hist.frame_index = i;
    hist.bins = mix(color_protos[pick_color(rng)],
                    random_distribution<vscan::kColorBins>(rng), jitter(rng));
    vscan::TextureVector tex;
    tex.frame_index = i;
    tex.coeffs = mix(texture_protos[pick_texture(rng)],
                     random_distribution<vscan::kTextureDim>(rng), jitter(rng));
    db.insert(std::move(hist), std::move(tex));
  }
  return db;
}

inline vscan::ScoreMatrix random_score_matrix(std::mt19937& rng, int n) {
  vscan::ScoreMatrix m(n);
  std::uniform_int_distribution<int> score(0, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m.set(i, j, score(rng));
  }
  return m;
}

// --- filesystem and subprocess helpers ---------------------------------------

struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    const std::filesystem::path base = std::filesystem::temp_directory_path();
    std::random_device rd;
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::filesystem::path candidate = base / (tag + "_" + std::to_string(rd()));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path = std::move(candidate);
        return;
      }
    }
    throw std::runtime_error("cannot create temp directory under " + base.string());
  }

  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }

  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

struct CmdResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr interleaved
};

inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult res;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

inline std::string quoted(const std::filesystem::path& p) {
  return vscan::detail::shell_quote(p.string());
}

#ifdef VSCAN_CLI_PATH
inline std::string cli_path() { return VSCAN_CLI_PATH; }
#endif

}  // namespace vscan_test
