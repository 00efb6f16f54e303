// Command-line front end: summarize a video or frame directory, score one
// summary against another, or run a batch evaluation manifest.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vscan/vscan.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;

struct RunConfig {
  std::string input;
  std::string out = "summary";
  std::string fps = "1";
  std::string workdir;
  std::string cache;
  std::string decoder;
  std::string mode = "dual";
  unsigned threads = 0;
  vscan::ClusteringParams params;
};

vscan::ClusterMode parse_mode(const std::string& mode) {
  if (mode == "dual") return vscan::ClusterMode::DualFeature;
  if (mode == "color") return vscan::ClusterMode::ColorOnly;
  vscan::raise(vscan::ErrorCode::ShapeError, "unknown mode '" + mode + "' (use dual or color)");
}

vscan::FrameSequence load_input(const RunConfig& cfg) {
  const fs::path input(cfg.input);
  std::error_code ec;
  if (fs::is_directory(input, ec)) {
    const vscan::Rational fps = vscan::parse_rational(cfg.fps);
    vscan::FrameSequence seq = vscan::load_image_directory(input, fps);
    return vscan::presample(seq, vscan::Rational{1, 1});
  }
  const fs::path workdir = cfg.workdir.empty() ? fs::path(cfg.out) / "frames" : fs::path(cfg.workdir);
  return vscan::decode_video(input, workdir, cfg.decoder);
}

vscan::FeatureDatabase features_with_cache(const RunConfig& cfg,
                                           const vscan::FrameSequence& seq) {
  if (cfg.cache.empty()) {
    return vscan::extract_features(seq, cfg.threads);
  }
  const fs::path cache_path(cfg.cache);
  const std::uint64_t hash = vscan::content_hash(seq);
  std::error_code ec;
  if (fs::is_regular_file(cache_path, ec)) {
    try {
      vscan::FeatureCache cache = vscan::read_feature_cache(cache_path);
      if (cache.content_hash == hash) {
        return std::move(cache.db);
      }
    } catch (const vscan::Error&) {
      // stale or unreadable cache: fall through and recompute
    }
  }
  vscan::FeatureDatabase db = vscan::extract_features(seq, cfg.threads);
  vscan::write_feature_cache(cache_path, db, hash);
  return db;
}

int cmd_summarize(const RunConfig& cfg) {
  const vscan::FrameSequence seq = load_input(cfg);
  const vscan::FeatureDatabase db = features_with_cache(cfg, seq);
  const vscan::ClusterAssignment assignment = vscan::cluster(db, cfg.params);
  const vscan::Summary summary =
      vscan::select_keyframes(assignment, db.order, seq.source_id, cfg.params);
  vscan::write_summary(summary, seq, fs::path(cfg.out));
  std::cout << "keyframes: " << summary.keyframes.size() << "\n";
  std::cout << "noise frames: " << assignment.noise_count() << "\n";
  return kExitOk;
}

int cmd_evaluate(const std::string& auto_dir, const std::string& user_dir,
                 const vscan::SimilarityThresholds& th) {
  const vscan::FrameSequence auto_sum = vscan::load_summary_dir(auto_dir);
  const vscan::FrameSequence user_sum = vscan::load_summary_dir(user_dir);
  const vscan::EvalReport report = vscan::evaluate(auto_sum, user_sum, th);
  std::printf("n_auto: %d\n", report.n_auto);
  std::printf("n_user: %d\n", report.n_user);
  std::printf("n_matched: %d\n", report.n_matched);
  std::printf("precision: %.6f\n", report.precision);
  std::printf("recall: %.6f\n", report.recall);
  std::printf("f_measure: %.6f\n", report.f_measure);
  return kExitOk;
}

int cmd_batch_eval(const std::string& manifest, const std::string& out_csv,
                   const vscan::SimilarityThresholds& th) {
  const std::string csv = vscan::batch_evaluate(fs::path(manifest), th);
  if (out_csv.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_csv, std::ios::binary);
    if (!out) {
      vscan::raise(vscan::ErrorCode::IoError, "cannot open " + out_csv + " for writing");
    }
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Static video summarizer: density clustering over color and "
               "texture features with automatic noise rejection"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string eval_auto, eval_user, manifest, out_csv;
  vscan::SimilarityThresholds eval_th;

  CLI::App* sum = app.add_subcommand("summarize", "Summarize a video or frame directory");
  sum->add_option("--input", cfg.input, "Video file or directory of frames")->required();
  sum->add_option("--out", cfg.out, "Output directory for the summary");
  sum->add_option("--fps", cfg.fps,
                  "Native rate of a frame directory (e.g. 30, 29.97, 30000/1001)");
  sum->add_option("--workdir", cfg.workdir, "Scratch directory for decoded frames");
  sum->add_option("--cache", cfg.cache, "Feature cache file reused across runs");
  sum->add_option("--decoder", cfg.decoder, "External decoder executable (default: $VSCAN_DECODER or ffmpeg)");
  sum->add_option("--eps-color", cfg.params.thresholds.eps_color, "Color similarity threshold");
  sum->add_option("--eps-texture", cfg.params.thresholds.eps_texture,
                  "Texture similarity threshold");
  sum->add_option("--eps", cfg.params.eps, "Required composite score (0, 1 or 2)")
      ->check(CLI::Range(0, 2));
  sum->add_option("--minpts", cfg.params.minpts, "Minimum neighbors for a core frame")
      ->check(CLI::PositiveNumber);
  sum->add_option("--mode", cfg.mode, "Clustering mode: dual or color")
      ->check(CLI::IsMember({"dual", "color"}));
  sum->add_option("--threads", cfg.threads, "Feature extraction threads (0 = auto)");

  CLI::App* eval = app.add_subcommand("evaluate", "Score one summary against another");
  eval->add_option("--auto", eval_auto, "Directory with the automatic summary")->required();
  eval->add_option("--user", eval_user, "Directory with the user summary")->required();
  eval->add_option("--eps-color", eval_th.eps_color, "Color similarity threshold");
  eval->add_option("--eps-texture", eval_th.eps_texture, "Texture similarity threshold");

  CLI::App* batch = app.add_subcommand("batch-eval", "Evaluate a whole dataset manifest");
  batch->add_option("--manifest", manifest, "Manifest file (video_id<TAB>auto_dir<TAB>user,...)")
      ->required();
  batch->add_option("--out", out_csv, "Write the CSV report here instead of stdout");
  batch->add_option("--eps-color", eval_th.eps_color, "Color similarity threshold");
  batch->add_option("--eps-texture", eval_th.eps_texture, "Texture similarity threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (sum->parsed()) {
      cfg.params.mode = parse_mode(cfg.mode);
      cfg.params.validate();
      return cmd_summarize(cfg);
    }
    if (eval->parsed()) {
      return cmd_evaluate(eval_auto, eval_user, eval_th);
    }
    return cmd_batch_eval(manifest, out_csv, eval_th);
  } catch (const vscan::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return e.bad_input() ? kExitBadInput : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
