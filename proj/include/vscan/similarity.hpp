#pragma once

#include <cmath>
#include <map>
#include <span>
#include <string>

#include "vscan/color_features.hpp"
#include "vscan/errors.hpp"
#include "vscan/texture_features.hpp"

namespace vscan {

inline constexpr double kDefaultEps = 0.97;
inline constexpr double kNormalizationTol = 1e-6;

struct SimilarityThresholds {
  double eps_color = kDefaultEps;
  double eps_texture = kDefaultEps;
};

// Bhattacharyya coefficient sum_i sqrt(p_i * q_i) over two discrete
// distributions. 1 means identical, 0 means disjoint support. Symmetric to
// the last bit because the products commute and the summation order is fixed.
inline double bhattacharyya(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    raise(ErrorCode::ShapeError, "distributions differ in length: " +
                                     std::to_string(p.size()) + " vs " +
                                     std::to_string(q.size()));
  }
  double sum_p = 0.0;
  double sum_q = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0) {
      raise(ErrorCode::NormalizationError, "distribution has a negative entry");
    }
    sum_p += p[i];
    sum_q += q[i];
  }
  if (std::fabs(sum_p - 1.0) > kNormalizationTol || std::fabs(sum_q - 1.0) > kNormalizationTol) {
    raise(ErrorCode::NormalizationError, "input is not L1-normalized");
  }
  double coeff = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    coeff += std::sqrt(p[i] * q[i]);
  }
  return coeff;
}

inline double color_similarity(const ColorHistogram& p, const ColorHistogram& q) {
  return bhattacharyya(p.bins, q.bins);
}

inline double texture_similarity(const TextureVector& p, const TextureVector& q) {
  return bhattacharyya(p.coeffs, q.coeffs);
}

// Composite similarity score of two frames: 2 when color- and texture-based
// similar, 1 when exactly one of the two holds, 0 otherwise. Thresholds are
// inclusive. Symmetric in p and q.
inline int composite_score(int p_idx, int q_idx, const std::map<int, ColorHistogram>& cd,
                           const std::map<int, TextureVector>& td,
                           const SimilarityThresholds& th) {
  const auto cp = cd.find(p_idx);
  const auto cq = cd.find(q_idx);
  const auto tp = td.find(p_idx);
  const auto tq = td.find(q_idx);
  if (cp == cd.end() || tp == td.end()) {
    raise(ErrorCode::UnknownFrame, "frame " + std::to_string(p_idx) + " not in database");
  }
  if (cq == cd.end() || tq == td.end()) {
    raise(ErrorCode::UnknownFrame, "frame " + std::to_string(q_idx) + " not in database");
  }
  const bool color_sim = color_similarity(cp->second, cq->second) >= th.eps_color;
  const bool texture_sim = texture_similarity(tp->second, tq->second) >= th.eps_texture;
  return (color_sim ? 1 : 0) + (texture_sim ? 1 : 0);
}

}  // namespace vscan
