#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <string>

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wdeprecated-enum-enum-conversion"
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#pragma GCC diagnostic pop

#include "vscan/errors.hpp"
#include "vscan/image.hpp"

namespace vscan {

inline bool is_image_file(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

inline ImageRgb load_image(const std::filesystem::path& path) {
  const cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty()) {
    raise(ErrorCode::DecodeError, "cannot decode image file " + path.string());
  }
  ImageRgb img(bgr.cols, bgr.rows);
  for (int y = 0; y < bgr.rows; ++y) {
    const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      img.set(x, y, Rgb{row[x][2], row[x][1], row[x][0]});
    }
  }
  return img;
}

inline void save_png(const ImageRgb& img, const std::filesystem::path& path) {
  if (img.empty()) raise(ErrorCode::ShapeError, "cannot save an empty image");
  cv::Mat bgr(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width; ++x) {
      const Rgb px = img.at(x, y);
      row[x] = cv::Vec3b(px.b, px.g, px.r);
    }
  }
  try {
    if (!cv::imwrite(path.string(), bgr)) {
      raise(ErrorCode::IoError, "failed to write " + path.string());
    }
  } catch (const cv::Exception& e) {
    raise(ErrorCode::IoError, "failed to write " + path.string() + ": " + e.what());
  }
}

}  // namespace vscan
