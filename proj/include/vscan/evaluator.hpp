#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vscan/errors.hpp"
#include "vscan/feature_db.hpp"
#include "vscan/ingest.hpp"
#include "vscan/similarity.hpp"

namespace vscan {

struct EvalReport {
  int n_auto = 0;
  int n_user = 0;
  int n_matched = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

inline EvalReport report_from_counts(int n_auto, int n_user, int n_matched) {
  EvalReport r;
  r.n_auto = n_auto;
  r.n_user = n_user;
  r.n_matched = n_matched;
  r.precision = (n_auto > 0) ? static_cast<double>(n_matched) / n_auto : 0.0;
  r.recall = (n_user > 0) ? static_cast<double>(n_matched) / n_user : 0.0;
  const double pr = r.precision + r.recall;
  r.f_measure = (pr > 0.0) ? 2.0 * r.precision * r.recall / pr : 0.0;
  return r;
}

// Greedy one-to-one matching with exclusion: automatic frames are visited in
// temporal order and bind the first still-unmatched user frame that is
// color-based similar OR texture-based similar.
inline std::vector<std::pair<int, int>> match_features(const FeatureDatabase& auto_db,
                                                       const FeatureDatabase& user_db,
                                                       const SimilarityThresholds& th) {
  std::vector<std::pair<int, int>> matches;
  std::vector<bool> taken(user_db.order.size(), false);
  for (int a : auto_db.order) {
    for (std::size_t u = 0; u < user_db.order.size(); ++u) {
      if (taken[u]) continue;
      const int uid = user_db.order[u];
      const bool color_sim =
          color_similarity(auto_db.color.at(a), user_db.color.at(uid)) >= th.eps_color;
      const bool texture_sim =
          texture_similarity(auto_db.texture.at(a), user_db.texture.at(uid)) >= th.eps_texture;
      if (color_sim || texture_sim) {
        taken[u] = true;
        matches.emplace_back(a, uid);
        break;
      }
    }
  }
  return matches;
}

inline std::vector<std::pair<int, int>> match_summaries(const FrameSequence& auto_sum,
                                                        const FrameSequence& user_sum,
                                                        const SimilarityThresholds& th) {
  return match_features(extract_features(auto_sum), extract_features(user_sum), th);
}

inline EvalReport evaluate(const FeatureDatabase& auto_db, const FeatureDatabase& user_db,
                           const SimilarityThresholds& th) {
  const auto matches = match_features(auto_db, user_db, th);
  return report_from_counts(static_cast<int>(auto_db.size()),
                            static_cast<int>(user_db.size()),
                            static_cast<int>(matches.size()));
}

inline EvalReport evaluate(const FrameSequence& auto_sum, const FrameSequence& user_sum,
                           const SimilarityThresholds& th) {
  return evaluate(extract_features(auto_sum), extract_features(user_sum), th);
}

namespace detail {

struct ManifestEntry {
  std::string video_id;
  std::filesystem::path auto_dir;
  std::vector<std::filesystem::path> user_dirs;
};

// Manifest format: one video per line, `video_id<TAB>auto_dir<TAB>user1,user2`.
// Relative paths are resolved against the manifest's directory.
inline std::vector<ManifestEntry> parse_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) raise(ErrorCode::IoError, "cannot open manifest " + manifest.string());
  const std::filesystem::path base = manifest.has_parent_path()
                                         ? manifest.parent_path()
                                         : std::filesystem::path(".");
  const auto resolve = [&](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  std::vector<ManifestEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = (t1 == std::string::npos) ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos || t1 == 0 ||
        t2 == t1 + 1 || t2 + 1 >= line.size()) {
      raise(ErrorCode::ManifestError,
            "malformed manifest line " + std::to_string(line_no) + " in " + manifest.string());
    }
    ManifestEntry entry;
    entry.video_id = line.substr(0, t1);
    entry.auto_dir = resolve(line.substr(t1 + 1, t2 - t1 - 1));
    std::stringstream users(line.substr(t2 + 1));
    std::string user;
    while (std::getline(users, user, ',')) {
      if (user.empty()) {
        raise(ErrorCode::ManifestError,
              "empty user directory on line " + std::to_string(line_no));
      }
      entry.user_dirs.push_back(resolve(user));
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) {
    raise(ErrorCode::ManifestError, "manifest " + manifest.string() + " lists no videos");
  }
  return entries;
}

inline std::string format_fixed(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace detail

// Summary directories written by this tool contain a contact sheet next to
// the keyframes; when a manifest file is present only the listed keyframes
// are loaded.
inline FrameSequence load_summary_dir(const std::filesystem::path& dir) {
  const std::filesystem::path manifest = dir / "summary.json";
  std::error_code ec;
  if (!std::filesystem::is_regular_file(manifest, ec)) {
    return load_image_directory(dir);
  }
  std::ifstream in(manifest);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::IoError, "unreadable summary manifest " + manifest.string() + ": " + e.what());
  }
  FrameSequence seq;
  seq.source_id = dir.string();
  for (const auto& kf : doc.at("keyframes")) {
    Frame frame;
    frame.index = static_cast<int>(seq.frames.size());
    frame.source_second = kf.value("source_second", frame.index);
    frame.pixels = load_image(dir / kf.at("file").get<std::string>());
    seq.frames.push_back(std::move(frame));
  }
  if (seq.empty()) raise(ErrorCode::NoFrames, "summary " + dir.string() + " has no keyframes");
  return seq;
}

// Evaluates every (auto, user) pair listed in the manifest and renders the
// CSV report: one row per pair, a mean row per video, and a corpus row that
// averages the per-video means.
inline std::string batch_evaluate(const std::filesystem::path& manifest,
                                  const SimilarityThresholds& th = {}) {
  const auto entries = detail::parse_manifest(manifest);

  std::string csv = "video_id,user_id,precision,recall,f_measure\n";
  double corpus_p = 0.0, corpus_r = 0.0, corpus_f = 0.0;
  for (const auto& entry : entries) {
    std::error_code ec;
    if (!std::filesystem::is_directory(entry.auto_dir, ec)) {
      raise(ErrorCode::IoError,
            "missing automatic summary directory " + entry.auto_dir.string() + " for video " +
                entry.video_id);
    }
    const FeatureDatabase auto_db = extract_features(load_summary_dir(entry.auto_dir));
    double mean_p = 0.0, mean_r = 0.0, mean_f = 0.0;
    for (const auto& user_dir : entry.user_dirs) {
      if (!std::filesystem::is_directory(user_dir, ec)) {
        raise(ErrorCode::IoError, "missing user summary directory " + user_dir.string() +
                                      " for video " + entry.video_id);
      }
      const FeatureDatabase user_db = extract_features(load_summary_dir(user_dir));
      const EvalReport report = evaluate(auto_db, user_db, th);
      csv += entry.video_id + "," + user_dir.filename().string() + "," +
             detail::format_fixed(report.precision) + "," + detail::format_fixed(report.recall) +
             "," + detail::format_fixed(report.f_measure) + "\n";
      mean_p += report.precision;
      mean_r += report.recall;
      mean_f += report.f_measure;
    }
    const double k = static_cast<double>(entry.user_dirs.size());
    mean_p /= k;
    mean_r /= k;
    mean_f /= k;
    csv += entry.video_id + ",mean," + detail::format_fixed(mean_p) + "," +
           detail::format_fixed(mean_r) + "," + detail::format_fixed(mean_f) + "\n";
    corpus_p += mean_p;
    corpus_r += mean_r;
    corpus_f += mean_f;
  }
  const double v = static_cast<double>(entries.size());
  csv += "corpus,mean," + detail::format_fixed(corpus_p / v) + "," +
         detail::format_fixed(corpus_r / v) + "," + detail::format_fixed(corpus_f / v) + "\n";
  return csv;
}

}  // namespace vscan
