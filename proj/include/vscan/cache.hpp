#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "vscan/errors.hpp"
#include "vscan/feature_db.hpp"
#include "vscan/frame.hpp"

namespace vscan {

inline constexpr char kCacheMagic[8] = {'V', 'S', 'C', 'A', 'N', 'F', 'T', 'C'};
inline constexpr std::uint32_t kCacheFormatVersion = 1;
// Bump when the feature extractors change; cached features become stale.
inline constexpr std::uint32_t kExtractorVersion = 1;

struct FeatureCache {
  std::uint32_t format_version = kCacheFormatVersion;
  std::uint32_t extractor_version = kExtractorVersion;
  std::uint64_t content_hash = 0;
  FeatureDatabase db;
};

// FNV-1a over the frame indices, timing and raw pixel data; identifies the
// exact input the cached features were computed from.
inline std::uint64_t content_hash(const FrameSequence& seq) {
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  const std::uint64_t n = seq.size();
  mix(&n, sizeof n);
  for (const Frame& frame : seq.frames) {
    const std::int32_t meta[4] = {frame.index, frame.source_second, frame.pixels.width,
                                  frame.pixels.height};
    mix(meta, sizeof meta);
    mix(frame.pixels.data.data(), frame.pixels.data.size());
  }
  return h;
}

namespace detail {

template <typename T>
void write_pod(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <typename T>
void read_pod(std::ifstream& in, T& value, const std::string& path) {
  in.read(reinterpret_cast<char*>(&value), sizeof value);
  if (!in) raise(ErrorCode::IoError, "truncated feature cache " + path);
}

}  // namespace detail

inline void write_feature_cache(const std::filesystem::path& path, const FeatureDatabase& db,
                                std::uint64_t hash) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoError, "cannot open cache file " + path.string());
  out.write(kCacheMagic, sizeof kCacheMagic);
  detail::write_pod(out, kCacheFormatVersion);
  detail::write_pod(out, kExtractorVersion);
  detail::write_pod(out, hash);
  const std::uint32_t n = static_cast<std::uint32_t>(db.size());
  detail::write_pod(out, n);
  for (int idx : db.order) {
    const ColorHistogram& hist = db.color.at(idx);
    const TextureVector& tex = db.texture.at(idx);
    detail::write_pod(out, static_cast<std::int32_t>(idx));
    out.write(reinterpret_cast<const char*>(hist.bins.data()),
              hist.bins.size() * sizeof(double));
    out.write(reinterpret_cast<const char*>(tex.coeffs.data()),
              tex.coeffs.size() * sizeof(double));
  }
  if (!out) raise(ErrorCode::IoError, "failed writing cache file " + path.string());
}

// Round trip is bit-exact: doubles are stored raw. Throws CacheVersionError
// when the format or extractor version differs; callers recompute.
inline FeatureCache read_feature_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open cache file " + path.string());
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kCacheMagic, sizeof magic) != 0) {
    raise(ErrorCode::IoError, path.string() + " is not a feature cache");
  }
  FeatureCache cache;
  detail::read_pod(in, cache.format_version, path.string());
  detail::read_pod(in, cache.extractor_version, path.string());
  if (cache.format_version != kCacheFormatVersion ||
      cache.extractor_version != kExtractorVersion) {
    raise(ErrorCode::CacheVersionError,
          "cache " + path.string() + " was written by format " +
              std::to_string(cache.format_version) + "/extractor " +
              std::to_string(cache.extractor_version));
  }
  detail::read_pod(in, cache.content_hash, path.string());
  std::uint32_t n = 0;
  detail::read_pod(in, n, path.string());
  for (std::uint32_t i = 0; i < n; ++i) {
    std::int32_t idx = 0;
    detail::read_pod(in, idx, path.string());
    ColorHistogram hist;
    TextureVector tex;
    hist.frame_index = idx;
    tex.frame_index = idx;
    in.read(reinterpret_cast<char*>(hist.bins.data()), hist.bins.size() * sizeof(double));
    in.read(reinterpret_cast<char*>(tex.coeffs.data()), tex.coeffs.size() * sizeof(double));
    if (!in) raise(ErrorCode::IoError, "truncated feature cache " + path.string());
    cache.db.insert(std::move(hist), std::move(tex));
  }
  return cache;
}

}  // namespace vscan
