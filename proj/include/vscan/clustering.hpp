#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "vscan/errors.hpp"
#include "vscan/feature_db.hpp"
#include "vscan/similarity.hpp"

namespace vscan {

enum class ClusterMode { DualFeature, ColorOnly };

inline const char* mode_name(ClusterMode mode) {
  return mode == ClusterMode::DualFeature ? "dual" : "color";
}

// Parameters of the dual-feature-space density clustering. In ColorOnly mode
// (the DB-Color baseline) `eps` is ignored and two frames are similar when
// their color coefficient reaches eps_color alone.
struct ClusteringParams {
  SimilarityThresholds thresholds{};
  int eps = 2;
  int minpts = 1;
  ClusterMode mode = ClusterMode::DualFeature;

  void validate() const {
    if (eps < 0 || eps > 2) raise(ErrorCode::ShapeError, "eps must be in {0,1,2}");
    if (minpts < 1) raise(ErrorCode::ShapeError, "minpts must be >= 1");
  }
};

inline constexpr int kNoiseLabel = 0;  // cluster ids start at 1

struct ClusterAssignment {
  std::map<int, int> labels;       // frame index -> cluster id, kNoiseLabel = noise
  std::map<int, bool> core_flags;  // frame index -> core frame condition
  int cluster_count = 0;

  bool is_noise(int idx) const { return labels.at(idx) == kNoiseLabel; }

  int noise_count() const {
    int n = 0;
    for (const auto& [idx, label] : labels) {
      if (label == kNoiseLabel) ++n;
    }
    return n;
  }

  std::vector<int> cluster_members(int cluster_id) const {
    std::vector<int> members;
    for (const auto& [idx, label] : labels) {
      if (label == cluster_id) members.push_back(idx);
    }
    return members;
  }
};

// Symmetric composite-score matrix with the diagonal pinned to 2.
struct ScoreMatrix {
  int n = 0;
  std::vector<std::uint8_t> scores;

  ScoreMatrix() = default;
  explicit ScoreMatrix(int size) : n(size), scores(static_cast<std::size_t>(size) * size, 0) {
    for (int i = 0; i < n; ++i) scores[static_cast<std::size_t>(i) * n + i] = 2;
  }

  int at(int i, int j) const { return scores[static_cast<std::size_t>(i) * n + j]; }

  void set(int i, int j, int value) {
    scores[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(value);
    scores[static_cast<std::size_t>(j) * n + i] = static_cast<std::uint8_t>(value);
  }
};

namespace detail {

// Classic density expansion over a symmetric adjacency, visiting frames in
// temporal order. The neighborhood of a frame excludes the frame itself, so
// with minpts = 1 a frame is core iff it has at least one similar neighbor
// and singleton frames end up as noise.
class AdjacencyClusterer {
 public:
  AdjacencyClusterer(int n, int minpts) : n_(n), minpts_(minpts) {}

  template <typename SimilarFn>
  ClusterAssignment run(const std::vector<int>& frame_ids, SimilarFn&& similar) const {
    constexpr int kUndef = -1;
    std::vector<std::vector<int>> neighbors(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j && similar(i, j)) neighbors[i].push_back(j);
      }
    }

    std::vector<int> label(n_, kUndef);
    std::vector<bool> core(n_);
    for (int i = 0; i < n_; ++i) {
      core[i] = neighbors[i].size() >= static_cast<std::size_t>(minpts_);
    }

    int next_cluster = 0;
    for (int i = 0; i < n_; ++i) {
      if (label[i] != kUndef) continue;
      if (!core[i]) {
        label[i] = kNoiseLabel;  // may be claimed as a border frame later
        continue;
      }
      const int cid = ++next_cluster;
      label[i] = cid;
      std::deque<int> seeds(neighbors[i].begin(), neighbors[i].end());
      while (!seeds.empty()) {
        const int q = seeds.front();
        seeds.pop_front();
        if (label[q] == kNoiseLabel) label[q] = cid;  // border frame
        if (label[q] != kUndef) continue;
        label[q] = cid;
        if (core[q]) {
          seeds.insert(seeds.end(), neighbors[q].begin(), neighbors[q].end());
        }
      }
    }

    ClusterAssignment out;
    out.cluster_count = next_cluster;
    for (int i = 0; i < n_; ++i) {
      out.labels[frame_ids[i]] = label[i];
      out.core_flags[frame_ids[i]] = core[i];
    }
    return out;
  }

 private:
  int n_;
  int minpts_;
};

}  // namespace detail

// Full pairwise composite-score table for a feature database.
inline ScoreMatrix score_matrix(const FeatureDatabase& db, const SimilarityThresholds& th) {
  const int n = static_cast<int>(db.size());
  ScoreMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m.set(i, j, db.score(db.order[i], db.order[j], th));
    }
  }
  return m;
}

// S_Eps(p): the frames similar to p under the configured mode, excluding p
// itself. Membership is symmetric.
inline std::vector<int> neighborhood(int p, const FeatureDatabase& db,
                                     const ClusteringParams& params) {
  params.validate();
  if (!db.contains(p)) {
    raise(ErrorCode::UnknownFrame, "frame " + std::to_string(p) + " not in database");
  }
  std::vector<int> result;
  for (int q : db.order) {
    if (q == p) continue;
    bool similar = false;
    if (params.mode == ClusterMode::DualFeature) {
      similar = db.score(p, q, params.thresholds) == params.eps;
    } else {
      similar = color_similarity(db.color.at(p), db.color.at(q)) >= params.thresholds.eps_color;
    }
    if (similar) result.push_back(q);
  }
  return result;
}

// Density clustering of the database. Dual-feature mode requires the
// composite score to equal `eps`; ColorOnly reproduces the single-space
// baseline on color features.
inline ClusterAssignment cluster(const FeatureDatabase& db, const ClusteringParams& params) {
  params.validate();
  if (db.size() == 0) raise(ErrorCode::NoFrames, "feature database is empty");
  const int n = static_cast<int>(db.size());
  const detail::AdjacencyClusterer clusterer(n, params.minpts);

  if (params.mode == ClusterMode::DualFeature) {
    const ScoreMatrix m = score_matrix(db, params.thresholds);
    return clusterer.run(db.order, [&](int i, int j) { return m.at(i, j) == params.eps; });
  }

  std::vector<const ColorHistogram*> hist(n);
  for (int i = 0; i < n; ++i) hist[i] = &db.color.at(db.order[i]);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool s = color_similarity(*hist[i], *hist[j]) >= params.thresholds.eps_color;
      adj[i][j] = s;
      adj[j][i] = s;
    }
  }
  return clusterer.run(db.order, [&](int i, int j) { return static_cast<bool>(adj[i][j]); });
}

// Clustering straight from a composite-score table (frames are 0..n-1).
inline ClusterAssignment cluster_scores(const ScoreMatrix& m, int eps, int minpts) {
  if (minpts < 1) raise(ErrorCode::ShapeError, "minpts must be >= 1");
  std::vector<int> ids(m.n);
  for (int i = 0; i < m.n; ++i) ids[i] = i;
  const detail::AdjacencyClusterer clusterer(m.n, minpts);
  return clusterer.run(ids, [&](int i, int j) { return m.at(i, j) == eps; });
}

}  // namespace vscan
