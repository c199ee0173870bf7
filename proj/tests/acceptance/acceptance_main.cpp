// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Needs the CLI binary path via --cli (criteria 1 and 8
// drive the real executable).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetrainer/posetrainer.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

using namespace posetrainer;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string detail;
};

#define ACHECK(cond, detail)                                                       \
  do {                                                                             \
    if (!(cond)) throw Failure{std::string(detail) + " (line " + std::to_string(__LINE__) + ")"}; \
  } while (0)

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult result;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw Failure{"popen failed for: " + cmd};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double parse_stat_line(const std::string& line, const std::string& prefix) {
  ACHECK(line.rfind(prefix, 0) == 0, "expected line starting with '" + prefix + "', got: " + line);
  return std::stod(line.substr(prefix.size()));
}

struct Context {
  fs::path cli;
  testutil::TempDir tmp{"posetrainer_acceptance"};
};

// Paper-anchored strings the transcripts must reproduce byte for byte.
const std::string kArmLine = "Exercise arm detected as: right.";
const std::string kRangePrefix = "Upper arm and torso angle range: ";
const std::string kMinAnglePrefix = "Upper arm and forearm minimum angle: ";
const std::string kCorrectLine = "Exercise performed correctly!";
const std::string kImprovedLine = "Exercise could be improved:";
const std::string kSuccessLine =
    "Exercise performed correctly! Weight was lifted fully up, and upper arm did not move "
    "significantly.";
const std::string kSwingFeedback =
    "Your upper arm shows significant rotation around the shoulder when curling. Try holding "
    "your upper arm still, parallel to your chest, and concentrate on rotating around your "
    "elbow only.";

constexpr double kGoodRange = 21.150955500327434;
constexpr double kGoodMinAngle = 40.74447650965106;
constexpr double kBadRange = 35.23131076818897;
constexpr double kBadMinAngle = 31.89380019853305;

fs::path make_fake_estimator(const fs::path& dir, const fs::path& staged_frames) {
  const fs::path script = dir / "fake_estimator.sh";
  std::ofstream(script) << "#!/bin/sh\ncp \"" << staged_frames.string() << "\"/*.json \"$4\"\n";
  fs::permissions(script, fs::perms::owner_all);
  return script;
}

// --- criterion 1 -----------------------------------------------------------

void bicep_golden_transcripts(Context& ctx) {
  const auto check_case = [&](double range, double min_angle, bool expect_correct,
                              const std::string& tag) {
    synthetic::BicepParams prm;
    prm.swing_range_deg = range;
    prm.elbow_min_deg = min_angle;
    const PoseSequence seq = synthetic::make_bicep_sequence(prm, "bicep_" + tag + "_1");

    const fs::path staged = ctx.tmp / ("frames_" + tag);
    synthetic::write_frame_files(seq, staged);
    const fs::path video = ctx.tmp / ("bicep_" + tag + "_1.mp4");
    std::ofstream(video) << "stand-in video";
    const fs::path script = make_fake_estimator(ctx.tmp.path(), staged);

    const CommandResult r = run_command(
        quoted(ctx.cli) + " --mode evaluate --exercise bicep_curl --video " + quoted(video) +
        " --openpose_bin " + quoted(script) + " --output_folder " +
        quoted(ctx.tmp / ("out_" + tag)));
    ACHECK(r.exit_code == (expect_correct ? 0 : 2), tag + ": wrong exit code");

    const auto lines = lines_of(r.out);
    ACHECK(lines.size() == 6, tag + ": transcript must be exactly 6 lines, got " +
                                  std::to_string(lines.size()));
    ACHECK(lines[0] == "processing video file...", tag + ": processing line mismatch");
    ACHECK(lines[1] == kArmLine, tag + ": arm line mismatch: " + lines[1]);
    const double printed_range = parse_stat_line(lines[2], kRangePrefix);
    const double printed_min = parse_stat_line(lines[3], kMinAnglePrefix);
    ACHECK(std::abs(printed_range - range) <= 0.5,
           tag + ": range off by " + std::to_string(printed_range - range));
    ACHECK(std::abs(printed_min - min_angle) <= 0.5,
           tag + ": min angle off by " + std::to_string(printed_min - min_angle));
    if (expect_correct) {
      ACHECK(lines[4] == kCorrectLine, tag + ": verdict line mismatch");
      ACHECK(lines[5] == kSuccessLine, tag + ": success feedback mismatch");
    } else {
      ACHECK(lines[4] == kImprovedLine, tag + ": verdict line mismatch");
      ACHECK(lines[5] == kSwingFeedback, tag + ": feedback mismatch");
    }
  };

  check_case(kGoodRange, kGoodMinAngle, true, "good");
  check_case(kBadRange, kBadMinAngle, false, "bad");
}

// --- criterion 2 -----------------------------------------------------------

void dtw_oracle_equivalence(Context&) {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<std::size_t> len(1, 7);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  int checked = 0;
  for (int it = 0; it < 1200; ++it) {
    const std::size_t d = it % 2 == 0 ? 1 : dim(rng);  // half scalar, half multivariate
    std::vector<std::vector<double>> q(len(rng), std::vector<double>(d));
    std::vector<std::vector<double>> c(len(rng), std::vector<double>(d));
    for (auto& row : q)
      for (double& v : row) v = value(rng);
    for (auto& row : c)
      for (double& v : row) v = value(rng);
    const double dp = dtw_distance(q, c);
    const double brute = oracles::dtw_brute_force(q, c);
    ACHECK(dp == brute, "DP " + std::to_string(dp) + " != brute force " + std::to_string(brute));
    ++checked;
  }
  ACHECK(checked >= 1000, "fewer than 1000 pairs checked");
}

// --- criterion 3 -----------------------------------------------------------

void dtw_metric_properties(Context&) {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> len(1, 25);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::uniform_real_distribution<double> value(-50.0, 50.0);
  long violations = 0;
  for (int it = 0; it < 10000; ++it) {
    const std::size_t d = dim(rng);
    const std::size_t m = len(rng);
    const std::size_t n = it % 2 == 0 ? m : len(rng);  // half equal-length for the bound
    std::vector<std::vector<double>> q(m, std::vector<double>(d));
    std::vector<std::vector<double>> c(n, std::vector<double>(d));
    for (auto& row : q)
      for (double& v : row) v = value(rng);
    for (auto& row : c)
      for (double& v : row) v = value(rng);

    const double qc = dtw_distance(q, c);
    if (!(qc >= 0.0)) ++violations;
    if (dtw_distance(q, q) != 0.0) ++violations;
    if (dtw_distance(c, q) != qc) ++violations;
    if (m == n) {
      double lockstep = 0.0;
      for (std::size_t i = 0; i < m; ++i) lockstep += oracles::euclidean_oracle(q[i], c[i]);
      if (!(qc <= lockstep)) ++violations;
    }
  }
  ACHECK(violations == 0, std::to_string(violations) + " metric-property violations");
}

// --- criterion 4 -----------------------------------------------------------

void median_filter_oracle(Context&) {
  std::mt19937_64 rng(77007);
  std::uniform_int_distribution<std::size_t> len(1, 60);
  std::uniform_real_distribution<double> value(-100.0, 100.0);
  int checked = 0;
  for (int it = 0; it < 1200; ++it) {
    Series s(len(rng));
    switch (it % 5) {
      case 0:  // arbitrary values
        for (double& v : s) v = value(rng);
        break;
      case 1:  // constant
        std::fill(s.begin(), s.end(), value(rng));
        break;
      case 2:  // monotone
        for (double& v : s) v = value(rng);
        std::sort(s.begin(), s.end());
        break;
      case 3:  // spikes on a flat baseline
        std::fill(s.begin(), s.end(), 0.0);
        for (std::size_t i = 0; i < s.size(); i += 7) s[i] = value(rng) * 10.0;
        break;
      default:  // random walk
        double acc = 0.0;
        for (double& v : s) v = (acc += value(rng) * 0.1);
        break;
    }
    ACHECK(smooth(s) == oracles::smooth_oracle(s), "smooth() diverged from the oracle");
    for (int window : {3, 5, 7}) {
      ACHECK(median_filter(s, window) == oracles::median_filter_oracle(s, window),
             "median_filter diverged from the oracle");
    }
    ++checked;
  }
  ACHECK(checked >= 1000, "fewer than 1000 series checked");
}

// --- criterion 5 -----------------------------------------------------------

bool is_angle_rule(const std::string& rule_id) {
  return rule_id == "bicep_curl.swing_range" || rule_id == "bicep_curl.curl_angle" ||
         rule_id == "front_raise.raise_angle" || rule_id == "shoulder_shrug.straight_arm" ||
         rule_id == "shoulder_press.lockout_angle";
}

void check_invariance(const PoseSequence& seq, ExerciseKind exercise, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> shift(-500.0, 500.0);
  const double scale = std::exp(log_scale(rng));
  const PoseSequence moved = synthetic::transform_sequence(seq, scale, shift(rng), shift(rng));

  const Evaluation a = evaluate(seq, exercise);
  const Evaluation b = evaluate(moved, exercise);
  ACHECK(a.verdict == b.verdict, std::string(exercise_name(exercise)) + ": verdict changed");
  ACHECK(a.rules.size() == b.rules.size(), "rule count changed");
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    ACHECK(a.rules[i].passed == b.rules[i].passed, a.rules[i].rule_id + ": rule outcome changed");
    const double delta = std::abs(a.rules[i].statistic - b.rules[i].statistic);
    const double tol = is_angle_rule(a.rules[i].rule_id) ? 1e-6 : 1e-9;
    ACHECK(delta <= tol, a.rules[i].rule_id + ": statistic drifted by " + std::to_string(delta));
  }
}

void geometric_invariance(Context&) {
  std::mt19937_64 rng(10101);
  std::uniform_real_distribution<double> torso(60.0, 120.0);
  std::uniform_real_distribution<double> pos(100.0, 600.0);
  const auto pick = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  for (int it = 0; it < 15; ++it) {
    synthetic::BicepParams prm;
    prm.torso_px = torso(rng);
    prm.neck_x = pos(rng);
    prm.neck_y = pos(rng);
    prm.seed = static_cast<std::uint64_t>(it);
    prm.noise_sigma = 0.005;
    prm.swing_range_deg = it % 2 == 0 ? pick(6.0, 30.0) : pick(40.0, 60.0);
    prm.elbow_min_deg = it % 3 == 0 ? pick(80.0, 100.0) : pick(30.0, 60.0);
    check_invariance(synthetic::make_bicep_sequence(prm, "inv"), ExerciseKind::bicep_curl, rng);
  }
  for (int it = 0; it < 15; ++it) {
    synthetic::FrontRaiseParams prm;
    prm.torso_px = torso(rng);
    prm.neck_x = pos(rng);
    prm.neck_y = pos(rng);
    prm.seed = static_cast<std::uint64_t>(it);
    prm.noise_sigma = 0.005;
    prm.arm_high_deg = it % 2 == 0 ? pick(95.0, 130.0) : pick(50.0, 80.0);
    prm.sway_amp = it % 3 == 0 ? pick(0.20, 0.35) : pick(0.01, 0.10);
    check_invariance(synthetic::make_front_raise_sequence(prm, "inv"), ExerciseKind::front_raise,
                     rng);
  }
  for (int it = 0; it < 15; ++it) {
    synthetic::ShrugParams prm;
    prm.torso_px = torso(rng);
    prm.neck_x = pos(rng);
    prm.neck_y = pos(rng);
    prm.seed = static_cast<std::uint64_t>(it);
    prm.noise_sigma = 0.005;
    prm.lift_amp = it % 2 == 0 ? pick(0.10, 0.20) : pick(0.01, 0.06);
    prm.elbow_min_deg = it % 3 == 0 ? pick(100.0, 140.0) : pick(155.0, 176.0);
    check_invariance(synthetic::make_shoulder_shrug_sequence(prm, "inv"),
                     ExerciseKind::shoulder_shrug, rng);
  }
  for (int it = 0; it < 15; ++it) {
    synthetic::PressParams prm;
    prm.torso_px = torso(rng);
    prm.neck_x = pos(rng);
    prm.neck_y = pos(rng);
    prm.seed = static_cast<std::uint64_t>(it);
    prm.noise_sigma = 0.005;
    prm.sway_amp = it % 2 == 0 ? pick(0.01, 0.10) : pick(0.20, 0.30);
    prm.elbow_excursion = it % 3 == 0 ? pick(-0.30, -0.10) : pick(0.10, 0.30);
    prm.elbow_max_deg = it % 5 == 0 ? pick(110.0, 140.0) : pick(155.0, 175.0);
    check_invariance(synthetic::make_shoulder_press_sequence(prm, "inv"),
                     ExerciseKind::shoulder_press, rng);
  }
}

// --- criterion 6 -----------------------------------------------------------

/// 40-sequence bicep experiment: 20 clean-form, 20 with injected shoulder
/// swing and/or partial curls, all with sigma=0.01 torso-unit noise and 1%
/// spike corruption. The generator parameters are the ground truth labels.
LabeledDataset synthetic_bicep_dataset() {
  std::mt19937_64 rng(600613);
  const auto pick = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  LabeledDataset ds;
  ds.exercise = ExerciseKind::bicep_curl;
  for (int i = 0; i < 40; ++i) {
    const bool is_good = i < 20;
    synthetic::BicepParams prm;
    prm.seed = static_cast<std::uint64_t>(1000 + i);
    prm.noise_sigma = 0.01;
    prm.spike_rate = 0.01;
    prm.frames = 48 + static_cast<int>(rng() % 40);
    prm.torso_px = pick(60.0, 120.0);
    prm.neck_x = pick(200.0, 500.0);
    prm.neck_y = pick(150.0, 400.0);
    if (is_good) {
      prm.swing_range_deg = pick(8.0, 25.0);
      prm.elbow_min_deg = pick(38.0, 55.0);
    } else {
      const int defect = i % 3;
      prm.swing_range_deg = defect != 1 ? pick(45.0, 80.0) : pick(8.0, 25.0);
      prm.elbow_min_deg = defect != 0 ? pick(80.0, 110.0) : pick(38.0, 55.0);
    }
    const std::string name =
        (is_good ? "synthetic_good_" : "synthetic_bad_") + std::to_string(i);
    const PoseSequence seq = synthetic::make_bicep_sequence(prm, name);
    ds.entries.push_back(TrainingEntry{featurize(normalize_sequence(seq), ds.exercise),
                                       is_good ? FormLabel::correct : FormLabel::incorrect,
                                       name});
  }
  return ds;
}

void synthetic_classification(Context&) {
  const LabeledDataset ds = synthetic_bicep_dataset();
  ACHECK(ds.entries.size() == 40, "generator must emit 40 sequences");
  const SplitMetrics m = evaluate_split(ds, 7, 0.6);
  ACHECK(m.train_size == 24 && m.test_size == 16, "60/40 stratified split expected");
  ACHECK(m.weighted.f1 >= 0.90,
         "weighted F1 " + std::to_string(m.weighted.f1) + " below 0.90");
}

// --- criterion 7 -----------------------------------------------------------

void perspective_accuracy(Context&) {
  std::mt19937_64 rng(7007);
  const auto pick = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    synthetic::BicepParams prm;
    prm.side = i % 2 == 0 ? Side::right : Side::left;
    prm.seed = static_cast<std::uint64_t>(i);
    prm.noise_sigma = 0.01;
    prm.active_confidence = pick(0.7, 1.0);
    prm.offside_confidence = pick(0.05, 0.3);
    const PoseSequence seq = synthetic::make_bicep_sequence(prm, "persp");
    ACHECK(detect_side(seq, ExerciseKind::bicep_curl) == prm.side,
           "side misdetected on sequence " + std::to_string(i));
    const PoseSequence mirrored = synthetic::mirror_sequence(seq, 640.0);
    const Side flipped = prm.side == Side::right ? Side::left : Side::right;
    ACHECK(detect_side(mirrored, ExerciseKind::bicep_curl) == flipped,
           "side misdetected on mirrored sequence " + std::to_string(i));
    checked += 2;
  }
  ACHECK(checked == 100, "expected 100 detections");
}

// --- criterion 8 -----------------------------------------------------------

void cli_determinism_and_schema(Context& ctx) {
  // Labeled dataset on disk.
  const fs::path data = ctx.tmp / "cli_dataset";
  fs::create_directories(data);
  for (int i = 0; i < 12; ++i) {
    const bool is_good = i < 6;
    synthetic::BicepParams prm;
    prm.seed = static_cast<std::uint64_t>(50 + i);
    prm.noise_sigma = 0.006;
    prm.swing_range_deg = is_good ? 12.0 + i : 50.0 + i;
    prm.elbow_min_deg = is_good ? 42.0 : 95.0;
    const std::string name =
        (is_good ? "bicep_good_" : "bicep_bad_") + std::to_string(is_good ? i : i - 6);
    save_sequence(synthetic::make_bicep_sequence(prm, name), data / (name + ".seq.json"));
  }

  const fs::path model = ctx.tmp / "cli_model";
  ACHECK(run_command(quoted(ctx.cli) + " --mode train --exercise bicep_curl --input_folder " +
                     quoted(data) + " --output_folder " + quoted(model))
                 .exit_code == 0,
         "train failed");

  // Determinism: identical bytes from two report runs with one seed.
  const std::string report_cmd = quoted(ctx.cli) + " --mode report --input_folder " +
                                 quoted(model) + " --output_folder " +
                                 quoted(ctx.tmp / "cli_report") +
                                 " --seed 5 --train_fraction 0.6";
  const CommandResult rep1 = run_command(report_cmd);
  ACHECK(rep1.exit_code == 0, "report failed");
  const std::string metrics1 = read_text(ctx.tmp / "cli_report" / "metrics.json");
  const CommandResult rep2 = run_command(report_cmd);
  ACHECK(rep2.exit_code == 0, "second report failed");
  const std::string metrics2 = read_text(ctx.tmp / "cli_report" / "metrics.json");
  ACHECK(rep1.out == rep2.out, "report stdout differs between identical runs");
  ACHECK(metrics1 == metrics2, "metrics record differs between identical runs");
  ACHECK(rep1.out.find("Avg/Total") != std::string::npos, "report table missing Avg/Total row");

  // Evaluation record round-trip through the documented schema.
  synthetic::BicepParams good;
  good.swing_range_deg = 18.0;
  const fs::path frames = ctx.tmp / "cli_frames_good";
  synthetic::write_frame_files(synthetic::make_bicep_sequence(good, "clip"), frames);
  const fs::path out_good = ctx.tmp / "cli_out_good";
  const CommandResult eval_good = run_command(
      quoted(ctx.cli) + " --mode evaluate --exercise bicep_curl --input_folder " +
      quoted(frames) + " --output_folder " + quoted(out_good));
  ACHECK(eval_good.exit_code == 0, "good evaluation should exit 0");

  const std::string record_text = read_text(out_good / "evaluation.json");
  const auto record = nlohmann::json::parse(record_text);
  ACHECK(record["schema_version"] == 1, "record schema version");
  for (const char* key : {"source_id", "exercise", "side", "verdict", "rules", "feedback"})
    ACHECK(record.contains(key), std::string("record missing key: ") + key);
  ACHECK(record.dump(2) + "\n" == record_text, "record does not round-trip byte-identically");
  ACHECK(record["verdict"] == "correct", "record disagrees with the exit code");
  for (const auto& rule : record["rules"])
    for (const char* key : {"rule_id", "statistic", "unit", "threshold", "passed", "feedback"})
      ACHECK(rule.contains(key), std::string("rule record missing key: ") + key);

  // Exit-code matrix: 0 correct / 2 incorrect / 1 error.
  synthetic::BicepParams bad;
  bad.swing_range_deg = 55.0;
  bad.elbow_min_deg = 95.0;
  const fs::path frames_bad = ctx.tmp / "cli_frames_bad";
  synthetic::write_frame_files(synthetic::make_bicep_sequence(bad, "clip"), frames_bad);

  const auto exit_of = [&](const std::string& cmd) { return run_command(cmd).exit_code; };
  ACHECK(exit_of(quoted(ctx.cli) + " --mode evaluate --exercise bicep_curl --input_folder " +
                 quoted(frames_bad) + " --output_folder " + quoted(ctx.tmp / "cli_out_bad")) == 2,
         "bad form must exit 2");
  ACHECK(exit_of(quoted(ctx.cli) + " --mode evaluate --exercise bicep_curl --input_folder " +
                 quoted(ctx.tmp / "missing_folder") + " --output_folder " +
                 quoted(ctx.tmp / "cli_out_err")) == 1,
         "missing input must exit 1");
  ACHECK(exit_of(quoted(ctx.cli) + " --mode classify --input_folder " + quoted(model) +
                 " --sequence " + quoted(data / "bicep_good_0.seq.json")) == 0,
         "correct query must exit 0");
  ACHECK(exit_of(quoted(ctx.cli) + " --mode classify --input_folder " + quoted(model) +
                 " --sequence " + quoted(data / "bicep_bad_0.seq.json")) == 2,
         "incorrect query must exit 2");
  ACHECK(exit_of(quoted(ctx.cli) + " --mode classify --input_folder " +
                 quoted(ctx.tmp / "no_model") + " --sequence " +
                 quoted(data / "bicep_good_0.seq.json")) == 1,
         "missing index must exit 1");
  const fs::path empty = ctx.tmp / "cli_empty";
  fs::create_directories(empty);
  ACHECK(exit_of(quoted(ctx.cli) + " --mode train --exercise bicep_curl --input_folder " +
                 quoted(empty) + " --output_folder " + quoted(ctx.tmp / "cli_model2")) == 1,
         "empty training folder must exit 1");
  ACHECK(exit_of(quoted(ctx.cli) + " --mode report --input_folder " + quoted(model) +
                 " --output_folder " + quoted(ctx.tmp / "cli_report2") +
                 " --train_fraction 0.99 --seed 1") == 0,
         "6/6 dataset splits fine at 0.99");

  // A 3/1 dataset at 0.99 leaves the minority label out of training.
  const fs::path skewed = ctx.tmp / "cli_skewed";
  fs::create_directories(skewed);
  for (int i = 0; i < 4; ++i) {
    synthetic::BicepParams prm;
    prm.seed = static_cast<std::uint64_t>(80 + i);
    prm.swing_range_deg = i < 3 ? 15.0 : 55.0;
    const std::string name = i < 3 ? "bicep_good_" + std::to_string(i) : "bicep_bad_0";
    save_sequence(synthetic::make_bicep_sequence(prm, name), skewed / (name + ".seq.json"));
  }
  const fs::path skewed_model = ctx.tmp / "cli_skewed_model";
  ACHECK(exit_of(quoted(ctx.cli) + " --mode train --exercise bicep_curl --input_folder " +
                 quoted(skewed) + " --output_folder " + quoted(skewed_model)) == 0,
         "skewed train must still index");
  ACHECK(exit_of(quoted(ctx.cli) + " --mode report --input_folder " + quoted(skewed_model) +
                 " --output_folder " + quoted(ctx.tmp / "cli_report3") +
                 " --train_fraction 0.99 --seed 1") == 1,
         "degenerate split must exit 1");
  ACHECK(exit_of(quoted(ctx.cli) + " --mode juggle") == 1, "unknown mode must exit 1");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Context&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") ctx.cli = argv[i + 1];
  if (ctx.cli.empty() || !fs::exists(ctx.cli)) {
    std::cerr << "usage: acceptance --cli <path-to-posetrainer-binary>\n";
    return 2;
  }

  const std::vector<Criterion> criteria = {
      {1, "bicep golden transcripts match the printed statistics and strings", 1.0,
       bicep_golden_transcripts},
      {2, "DTW equals exhaustive path enumeration on 1200 short pairs", 30.0,
       dtw_oracle_equivalence},
      {3, "DTW metric properties hold on 10000 random pairs", 60.0, dtw_metric_properties},
      {4, "double median filter equals the sorted-window oracle on 1200 series", 60.0,
       median_filter_oracle},
      {5, "verdicts and statistics survive uniform scaling and translation", 60.0,
       geometric_invariance},
      {6, "synthetic 40-clip bicep experiment reaches weighted F1 >= 0.90", 60.0,
       synthetic_classification},
      {7, "perspective detection is exact on attenuated and mirrored arms", 60.0,
       perspective_accuracy},
      {8, "CLI determinism, record schema round-trip, exit-code contract", 60.0,
       cli_determinism_and_schema},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.fn(ctx);
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > c.budget_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(c.budget_seconds) + " s budget";
    }
    char line[64];
    std::snprintf(line, sizeof(line), " (%.2f s)", elapsed);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << line;
    if (!ok) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
