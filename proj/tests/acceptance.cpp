// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit 0 only if
// everything passes. Expects the path of the vscan binary as argv[1].

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace fs = std::filesystem;
using vscan_test::quoted;
using vscan_test::run_cmd;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = {}) {
  std::printf("[%s] %d. %s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
              detail.empty() ? "" : ("  -- " + detail).c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Full-corpus table values are out of reach here; the pipeline only has to
//    run a batch manifest end to end and emit per-video and corpus means.
void criterion_batch_pipeline() {
  vscan_test::TempDir root("vscan_acc_batch");
  const vscan::FrameSequence red = vscan_test::scene_sequence({2}, false);
  vscan_test::write_frames_png(red, root.path / "auto1");
  vscan_test::write_frames_png(red, root.path / "user1a");
  vscan_test::write_frames_png(red, root.path / "user1b");
  const vscan::FrameSequence two = vscan_test::scene_sequence({2, 2}, false);
  vscan_test::write_frames_png(two, root.path / "auto2");
  vscan_test::write_frames_png(two, root.path / "user2a");

  std::ofstream(root.path / "manifest.tsv") << "vid1\tauto1\tuser1a,user1b\n"
                                            << "vid2\tauto2\tuser2a\n";

  const vscan_test::CmdResult res =
      run_cmd(g_cli + " batch-eval --manifest " + quoted(root.path / "manifest.tsv"));
  const bool ok = res.exit_code == 0 &&
                  res.out.find("video_id,user_id,precision,recall,f_measure") == 0 &&
                  res.out.find("vid1,mean,") != std::string::npos &&
                  res.out.find("vid2,mean,") != std::string::npos &&
                  res.out.find("corpus,mean,") != std::string::npos;
  report(1, "batch evaluation completes and reports per-video and corpus means", ok,
         ok ? "" : "exit " + std::to_string(res.exit_code));
}

// 2. Main clustering against the brute-force reference on random score
//    tables, under a wall-clock budget.
void criterion_oracle_equivalence() {
  std::mt19937 rng(1002);
  const auto start = std::chrono::steady_clock::now();
  bool agree = true;
  for (int trial = 0; trial < 1000 && agree; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 39);  // up to 40 frames
    const vscan::ScoreMatrix m = vscan_test::random_score_matrix(rng, n);
    const int minpts = 1 + static_cast<int>(rng() % 3);

    const vscan::ClusterAssignment got = vscan::cluster_scores(m, 2, minpts);
    const vscan::ClusterAssignment want = vscan_test::oracle_cluster(m, 2, minpts);
    if (got.core_flags != want.core_flags) agree = false;
    for (int i = 0; i < n && agree; ++i) {
      if (got.is_noise(i) != want.is_noise(i)) agree = false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char detail[64];
  std::snprintf(detail, sizeof(detail), "1000 instances in %.2f s", secs);
  report(2, "clustering equals the brute-force reference on random score tables",
         agree && secs < 10.0, detail);
}

// 3. Synthetic three-scene sequence with two one-frame glitches, end to end
//    through the binary at default parameters.
void criterion_synthetic_end_to_end() {
  vscan_test::TempDir root("vscan_acc_scenes");
  vscan_test::write_frames_png(vscan_test::three_scene_sequence(25), root.path / "frames");

  const vscan_test::CmdResult res =
      run_cmd(g_cli + " summarize --input " + quoted(root.path / "frames") + " --out " +
              quoted(root.path / "sum"));
  bool ok = res.exit_code == 0 && res.out.find("keyframes: 3") != std::string::npos &&
            res.out.find("noise frames: 2") != std::string::npos;
  if (ok) {
    const auto manifest = nlohmann::json::parse(slurp(root.path / "sum" / "summary.json"));
    ok = manifest["keyframe_count"] == 3 && manifest["frame_count"] == 77;
  }
  report(3, "three scenes plus two glitch frames give 3 keyframes and 2 noise frames", ok,
         ok ? "" : "exit " + std::to_string(res.exit_code));
}

// 4. Similarity kernel: range, bitwise symmetry, unity on identical inputs.
void criterion_similarity_kernel() {
  std::mt19937 rng(1004);
  bool ok = true;
  for (int trial = 0; trial < 10000 && ok; ++trial) {
    const auto p = vscan_test::random_distribution<vscan::kColorBins>(rng);
    const auto q = vscan_test::random_distribution<vscan::kColorBins>(rng);
    const double pq = vscan::bhattacharyya(p, q);
    const double qp = vscan::bhattacharyya(q, p);
    if (pq < 0.0 || pq > 1.0 + 1e-9) ok = false;
    if (pq != qp) ok = false;
    if (std::fabs(vscan::bhattacharyya(p, p) - 1.0) > 1e-12) ok = false;
  }
  report(4, "similarity coefficient is bounded, symmetric and 1 on identical inputs", ok);
}

// 5. Wavelet analysis: energy conservation per level and the constant-input
//    value after three levels.
void criterion_haar() {
  std::mt19937 rng(1005);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  bool ok = true;

  for (int trial = 0; trial < 100 && ok; ++trial) {
    vscan::DGrid in(64, 64);
    for (double& x : in.v) x = val(rng);
    double e_in = 0.0;
    for (double x : in.v) e_in += x * x;
    const vscan::DGrid out = vscan::haar2d_step(in);
    double e_out = 0.0;
    for (double x : out.v) e_out += x * x;
    if (std::fabs(e_out - e_in) > 1e-9 * e_in) ok = false;
  }

  for (int trial = 0; trial < 20 && ok; ++trial) {
    const double c = val(rng);
    vscan::DGrid in(64, 64);
    for (double& x : in.v) x = c;
    const vscan::DGrid approx = vscan::haar2d_approx(in, 3);
    for (double x : approx.v) {
      if (std::fabs(x - 8.0 * c) > 1e-12) ok = false;
    }
  }
  report(5, "one wavelet level conserves energy; constant input leaves level 3 as 8c", ok);
}

// 6. Evaluator algebra and the greedy-vs-maximum matching bound.
void criterion_evaluator() {
  bool ok = true;

  std::mt19937 seed7(7);
  const vscan::FeatureDatabase same = vscan_test::random_feature_db(seed7, 5, 2, 2);
  ok = vscan::evaluate(same, same, vscan::SimilarityThresholds{}).f_measure == 1.0;

  std::mt19937 rng(1006);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const int na = 1 + static_cast<int>(rng() % 20);
    const int nu = 1 + static_cast<int>(rng() % 20);
    const vscan::FeatureDatabase a = vscan_test::random_feature_db(rng, na, 4, 4);
    const vscan::FeatureDatabase u = vscan_test::random_feature_db(rng, nu, 4, 4);
    const vscan::SimilarityThresholds th;

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nu; ++j) {
        const bool c = vscan::color_similarity(a.color.at(i), u.color.at(j)) >= th.eps_color;
        const bool t =
            vscan::texture_similarity(a.texture.at(i), u.texture.at(j)) >= th.eps_texture;
        if (c || t) edges.emplace_back(i, j);
      }
    }
    const int greedy = static_cast<int>(vscan::match_features(a, u, th).size());
    if (greedy > vscan_test::oracle_max_matching(na, nu, edges)) ok = false;

    const vscan::EvalReport r = vscan::evaluate(a, u, th);
    const double lo = std::min(r.precision, r.recall);
    const double hi = std::max(r.precision, r.recall);
    if (r.f_measure < lo - 1e-12 || r.f_measure > hi + 1e-12) ok = false;
  }
  report(6, "evaluator keeps F between P and R, F=1 on identity, greedy under the optimum", ok);
}

// 7. Byte-identical manifests across two runs of the binary.
void criterion_determinism() {
  vscan_test::TempDir root("vscan_acc_det");
  vscan_test::write_frames_png(vscan_test::three_scene_sequence(5), root.path / "frames");

  const std::string base = g_cli + " summarize --input " + quoted(root.path / "frames");
  const int e1 = run_cmd(base + " --out " + quoted(root.path / "one")).exit_code;
  const int e2 = run_cmd(base + " --out " + quoted(root.path / "two")).exit_code;

  const std::string m1 = slurp(root.path / "one" / "summary.json");
  const std::string m2 = slurp(root.path / "two" / "summary.json");
  report(7, "two summarize runs produce byte-identical manifests",
         e1 == 0 && e2 == 0 && !m1.empty() && m1 == m2);
}

// 8. Dual-feature clusters never straddle two color-only clusters.
void criterion_refinement() {
  std::mt19937 rng(1008);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 25);
    const vscan::FeatureDatabase db = vscan_test::random_feature_db(rng, n, 3, 3);

    vscan::ClusteringParams dual;  // eps = 2, minpts = 1
    const vscan::ClusterAssignment d = vscan::cluster(db, dual);
    vscan::ClusteringParams color_only;
    color_only.mode = vscan::ClusterMode::ColorOnly;
    const vscan::ClusterAssignment c = vscan::cluster(db, color_only);

    for (int cid = 1; cid <= d.cluster_count && ok; ++cid) {
      int color_label = -1;
      for (int member : d.cluster_members(cid)) {
        if (c.is_noise(member)) continue;  // may fall into color noise
        if (color_label < 0) color_label = c.labels.at(member);
        if (c.labels.at(member) != color_label) ok = false;
      }
    }
  }
  report(8, "every dual-feature cluster sits inside one color-only cluster", ok);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: vscan_acceptance <path-to-vscan-binary>\n");
    return 2;
  }
  g_cli = argv[1];

  criterion_batch_pipeline();
  criterion_oracle_equivalence();
  criterion_synthetic_end_to_end();
  criterion_similarity_kernel();
  criterion_haar();
  criterion_evaluator();
  criterion_determinism();
  criterion_refinement();

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
