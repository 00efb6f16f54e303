#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vscan/errors.hpp"
#include "vscan/frame.hpp"
#include "vscan/image_io.hpp"
#include "vscan/rational.hpp"

namespace vscan {

inline constexpr const char* kDecoderEnvVar = "VSCAN_DECODER";
inline constexpr const char* kDefaultDecoder = "ffmpeg";

// Loads every .png/.jpg/.jpeg in `path` (non-recursive) in lexicographic
// filename order. Directory input is assumed to be pre-sampled already;
// callers that know better pass the native rate.
inline FrameSequence load_image_directory(const std::filesystem::path& path,
                                          Rational source_fps = Rational{1, 1}) {
  std::error_code ec;
  if (!std::filesystem::is_directory(path, ec)) {
    raise(ErrorCode::IoError, "not a directory: " + path.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(path)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    raise(ErrorCode::NoFrames, "no decodable image files in " + path.string());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  FrameSequence seq;
  seq.source_fps = source_fps;
  seq.source_id = path.string();
  seq.frames.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    Frame frame;
    frame.index = static_cast<int>(i);
    frame.source_second =
        static_cast<int>(floor_ratio(static_cast<std::int64_t>(i), Rational{1, 1}, source_fps));
    frame.pixels = load_image(files[i]);
    seq.frames.push_back(std::move(frame));
  }
  return seq;
}

// Keeps the first frame of each sampling period: sample k selects source
// index floor(k * source_fps / rate). Output indices are renumbered from 0
// and the result carries `rate` as its rate.
inline FrameSequence presample(const FrameSequence& seq, Rational rate) {
  if (seq.empty()) raise(ErrorCode::NoFrames, "cannot presample an empty sequence");
  if (rate > seq.source_fps) {
    raise(ErrorCode::InvalidRate, "sampling rate " + rate.str() + " exceeds source rate " +
                                      seq.source_fps.str());
  }
  FrameSequence out;
  out.source_fps = rate;
  out.source_id = seq.source_id;
  const std::int64_t n = static_cast<std::int64_t>(seq.size());
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t src = floor_ratio(k, seq.source_fps, rate);
    if (src >= n) break;
    Frame frame = seq.frames[static_cast<std::size_t>(src)];
    frame.index = static_cast<int>(k);
    out.frames.push_back(std::move(frame));
  }
  return out;
}

namespace detail {

inline bool executable_exists(const std::string& name) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const auto runnable = [&](const fs::path& p) {
    return fs::is_regular_file(p, ec) &&
           (fs::status(p, ec).permissions() & fs::perms::owner_exec) != fs::perms::none;
  };
  if (name.find('/') != std::string::npos) return runnable(name);
  const char* path_env = std::getenv("PATH");
  if (path_env == nullptr) return false;
  std::stringstream ss(path_env);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (!dir.empty() && runnable(fs::path(dir) / name)) return true;
  }
  return false;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

}  // namespace detail

// Dumps the video as numbered 1-fps PNGs in `workdir` via an external
// decoder process, then loads the dump. The decoder defaults to ffmpeg and
// can be overridden by `decoder` or the VSCAN_DECODER environment variable.
// The returned sequence is at 1 fps (the dump rate), so downstream
// presampling is the identity.
inline FrameSequence decode_video(const std::filesystem::path& video,
                                  const std::filesystem::path& workdir,
                                  std::string decoder = {}) {
  namespace fs = std::filesystem;
  if (decoder.empty()) {
    const char* env = std::getenv(kDecoderEnvVar);
    decoder = (env != nullptr && *env != '\0') ? env : kDefaultDecoder;
  }
  if (!detail::executable_exists(decoder)) {
    raise(ErrorCode::DecoderUnavailable, "decoder executable '" + decoder + "' not found");
  }
  std::error_code ec;
  if (!fs::is_regular_file(video, ec)) {
    raise(ErrorCode::IoError, "video file not found: " + video.string());
  }
  fs::create_directories(workdir, ec);
  const fs::path log = workdir / "decoder.log";
  const std::string pattern = (workdir / "frame_%06d.png").string();

  std::string cmd = detail::shell_quote(decoder) + " -hide_banner -y -i " +
                    detail::shell_quote(video.string()) + " -vf fps=1 " +
                    detail::shell_quote(pattern) + " >" + detail::shell_quote(log.string()) +
                    " 2>&1";
  const int status = std::system(cmd.c_str());
  if (status != 0) {
    std::string diag;
    std::ifstream in(log);
    std::string line;
    while (std::getline(in, line) && diag.size() < 2000) {
      diag += line;
      diag += '\n';
    }
    raise(ErrorCode::DecodeError, "decoder '" + decoder + "' failed on " + video.string() +
                                      (diag.empty() ? "" : ":\n" + diag));
  }

  FrameSequence seq = load_image_directory(workdir);
  seq.source_id = video.string();
  return seq;
}

}  // namespace vscan
