#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vscan/clustering.hpp"
#include "vscan/errors.hpp"
#include "vscan/frame.hpp"
#include "vscan/image_io.hpp"

namespace vscan {

inline constexpr int kContactSheetHeight = 120;

struct Keyframe {
  int frame_index = 0;
  int cluster_id = 0;
};

// One keyframe per cluster, ordered by appearance in the video.
struct Summary {
  std::vector<Keyframe> keyframes;
  std::string source_id;
  ClusteringParams params_echo;
};

// Picks, for every cluster, the middle core frame in temporal order (the
// lower median when the core count is even). Noise contributes nothing.
inline Summary select_keyframes(const ClusterAssignment& assignment,
                                std::span<const int> db_order, std::string source_id = {},
                                ClusteringParams params = {}) {
  std::map<int, std::vector<int>> cores_by_cluster;
  for (int idx : db_order) {
    const int label = assignment.labels.at(idx);
    if (label == kNoiseLabel) continue;
    if (assignment.core_flags.at(idx)) {
      cores_by_cluster[label].push_back(idx);  // db_order is temporal, so sorted
    }
  }

  Summary summary;
  summary.source_id = std::move(source_id);
  summary.params_echo = params;
  for (const auto& [cluster_id, cores] : cores_by_cluster) {
    const std::size_t mid = (cores.size() - 1) / 2;
    summary.keyframes.push_back(Keyframe{cores[mid], cluster_id});
  }
  std::sort(summary.keyframes.begin(), summary.keyframes.end(),
            [](const Keyframe& a, const Keyframe& b) { return a.frame_index < b.frame_index; });
  return summary;
}

// Horizontal strip of tiles, each scaled to a common height with its aspect
// ratio preserved.
inline ImageRgb make_contact_sheet(const std::vector<const ImageRgb*>& tiles,
                                   int tile_height = kContactSheetHeight) {
  if (tiles.empty()) raise(ErrorCode::ShapeError, "contact sheet needs at least one tile");
  std::vector<ImageRgb> scaled;
  scaled.reserve(tiles.size());
  int total_width = 0;
  for (const ImageRgb* tile : tiles) {
    const int w = std::max(
        1, static_cast<int>(std::lround(static_cast<double>(tile->width) * tile_height /
                                        tile->height)));
    scaled.push_back(resize_image(*tile, w, tile_height));
    total_width += w;
  }
  ImageRgb sheet(total_width, tile_height);
  int x0 = 0;
  for (const ImageRgb& tile : scaled) {
    for (int y = 0; y < tile.height; ++y) {
      for (int x = 0; x < tile.width; ++x) {
        sheet.set(x0 + x, y, tile.at(x, y));
      }
    }
    x0 += tile.width;
  }
  return sheet;
}

inline nlohmann::ordered_json params_to_json(const ClusteringParams& params) {
  return nlohmann::ordered_json{{"mode", mode_name(params.mode)},
                                {"eps_color", params.thresholds.eps_color},
                                {"eps_texture", params.thresholds.eps_texture},
                                {"eps", params.eps},
                                {"minpts", params.minpts}};
}

// Writes keyframe PNGs, the contact sheet and the JSON manifest into
// `outdir`. The manifest has a stable key order and no timestamps, so
// identical inputs produce byte-identical files. Returns the manifest path.
inline std::filesystem::path write_summary(const Summary& summary, const FrameSequence& frames,
                                           const std::filesystem::path& outdir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outdir, ec);
  if (!fs::is_directory(outdir, ec)) {
    raise(ErrorCode::IoError, "cannot create output directory " + outdir.string());
  }

  nlohmann::ordered_json manifest;
  manifest["source_id"] = summary.source_id;
  manifest["parameters"] = params_to_json(summary.params_echo);
  manifest["frame_count"] = frames.size();
  manifest["keyframe_count"] = summary.keyframes.size();
  manifest["keyframes"] = nlohmann::ordered_json::array();

  std::vector<const ImageRgb*> tiles;
  for (const Keyframe& kf : summary.keyframes) {
    if (kf.frame_index < 0 || static_cast<std::size_t>(kf.frame_index) >= frames.size()) {
      raise(ErrorCode::UnknownFrame, "keyframe index " + std::to_string(kf.frame_index) +
                                         " outside the frame sequence");
    }
    const Frame& frame = frames.frames[static_cast<std::size_t>(kf.frame_index)];
    const std::string file =
        "key_" + std::to_string(kf.cluster_id) + "_" + std::to_string(kf.frame_index) + ".png";
    save_png(frame.pixels, outdir / file);
    tiles.push_back(&frame.pixels);
    manifest["keyframes"].push_back(
        nlohmann::ordered_json{{"cluster_id", kf.cluster_id},
                               {"frame_index", kf.frame_index},
                               {"source_second", frame.source_second},
                               {"file", file}});
  }
  if (!tiles.empty()) {
    save_png(make_contact_sheet(tiles), outdir / "contact.png");
  }

  const fs::path manifest_path = outdir / "summary.json";
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) raise(ErrorCode::IoError, "cannot open " + manifest_path.string() + " for writing");
  out << manifest.dump(2) << "\n";
  if (!out) raise(ErrorCode::IoError, "failed writing " + manifest_path.string());
  return manifest_path;
}

}  // namespace vscan
