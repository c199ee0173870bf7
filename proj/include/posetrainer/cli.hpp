#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "posetrainer/classifier.hpp"
#include "posetrainer/dataset.hpp"
#include "posetrainer/errors.hpp"
#include "posetrainer/estimator.hpp"
#include "posetrainer/geometry.hpp"
#include "posetrainer/heuristics.hpp"
#include "posetrainer/pose.hpp"
#include "posetrainer/pose_io.hpp"

namespace posetrainer {

/// Parsed command-line configuration; one mode per invocation.
struct RunConfig {
  std::string mode;
  std::string exercise;
  std::string video;
  std::string input_folder;
  std::string sequence;
  std::string output_folder;
  std::string config_path;
  std::string openpose_bin;
  std::string manifest;
  std::uint64_t seed = 0;
  double train_fraction = 0.6;
};

namespace cli_detail {

/// Shortest decimal representation that round-trips the exact double, the
/// precision the transcripts print statistics at.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ParameterError(what);
}

/// Source id of a sequence file: the stem with a trailing ".seq" removed.
inline std::string sequence_source_id(const std::filesystem::path& p) {
  std::string stem = p.stem().string();
  if (stem.size() > 4 && stem.ends_with(".seq")) stem.erase(stem.size() - 4);
  return stem;
}

inline std::filesystem::path resolve_estimator_bin(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("POSETRAINER_OPENPOSE_BIN"); env && *env)
    return std::filesystem::path(env);
  throw EstimatorError(
      "no pose estimator configured; pass --openpose_bin or set POSETRAINER_OPENPOSE_BIN");
}

/// Loads the input sequence for evaluate/ingest and prints the processing
/// line for the chosen route.
inline PoseSequence load_input(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  const WarningSink warn = [&err](const std::string& msg) { err << "warning: " << msg << "\n"; };
  if (!cfg.video.empty()) {
    out << "processing video file...\n";
    const fs::path bin = resolve_estimator_bin(cfg.openpose_bin);
    const fs::path json_dir = fs::path(cfg.output_folder) / "estimator_json";
    const auto files = run_estimator(cfg.video, bin, json_dir);
    return load_sequence(files, fs::path(cfg.video).stem().string(), warn);
  }
  if (!cfg.input_folder.empty()) {
    out << "processing keypoint folder...\n";
    const auto files = list_frame_files(cfg.input_folder);
    return load_sequence(files, fs::path(cfg.input_folder).filename().string(), warn);
  }
  out << "processing sequence file...\n";
  return load_saved(cfg.sequence);
}

inline ThresholdConfig load_thresholds(const RunConfig& cfg) {
  if (cfg.config_path.empty()) return ThresholdConfig{};
  return ThresholdConfig::from_file(cfg.config_path);
}

inline nlohmann::json evaluation_record(const Evaluation& ev, const std::string& source_id) {
  nlohmann::json rules = nlohmann::json::array();
  for (const RuleResult& r : ev.rules)
    rules.push_back({{"rule_id", r.rule_id},
                     {"statistic", r.statistic},
                     {"unit", r.unit},
                     {"threshold", r.threshold},
                     {"passed", r.passed},
                     {"feedback", r.feedback}});
  return {
      {"schema_version", 1},
      {"source_id", source_id},
      {"exercise", exercise_name(ev.exercise)},
      {"side", side_name(ev.side)},
      {"verdict", label_name(ev.verdict)},
      {"rules", std::move(rules)},
      {"feedback", ev.feedback_lines()},
  };
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out << text;
  if (!out) throw IoError("cannot write file: " + path.string());
}

/// One comma-separated file per series, one row per frame, values rounded to
/// six decimals; external tools render the plots.
inline void write_plot_files(const Evaluation& ev, const std::filesystem::path& dir) {
  for (const auto& [name, series] : ev.series_dump) {
    std::string text = "frame,value\n";
    char line[64];
    for (std::size_t i = 0; i < series.size(); ++i) {
      std::snprintf(line, sizeof(line), "%zu,%.6f\n", i, series[i]);
      text += line;
    }
    write_text_file(dir / (name + ".csv"), text);
  }
}

inline void print_transcript(const Evaluation& ev, std::ostream& out) {
  if (ev.side != Side::both)
    out << "Exercise arm detected as: " << side_name(ev.side) << ".\n";
  for (const RuleResult& r : ev.rules)
    out << rule_statistic_label(r.rule_id) << ": " << format_double(r.statistic) << "\n";
  if (ev.verdict == FormLabel::correct)
    out << "Exercise performed correctly!\n";
  else
    out << "Exercise could be improved:\n";
  for (const std::string& line : ev.feedback_lines()) out << line << "\n";
}

inline int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  require(!cfg.exercise.empty(), "evaluate requires --exercise");
  const int inputs = (!cfg.video.empty() ? 1 : 0) + (!cfg.input_folder.empty() ? 1 : 0) +
                     (!cfg.sequence.empty() ? 1 : 0);
  require(inputs == 1, "evaluate requires exactly one of --video, --input_folder, --sequence");
  require(!cfg.output_folder.empty(), "evaluate requires --output_folder");

  const ExerciseKind exercise = parse_exercise(cfg.exercise);
  const ThresholdConfig thresholds = load_thresholds(cfg);
  fs::create_directories(cfg.output_folder);

  const PoseSequence seq = load_input(cfg, out, err);
  const Evaluation ev = evaluate(seq, exercise, thresholds);

  print_transcript(ev, out);
  write_text_file(fs::path(cfg.output_folder) / "evaluation.json",
                  evaluation_record(ev, seq.source_id).dump(2) + "\n");
  write_plot_files(ev, cfg.output_folder);
  return ev.verdict == FormLabel::correct ? 0 : 2;
}

inline int cmd_ingest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  const int inputs = (!cfg.video.empty() ? 1 : 0) + (!cfg.input_folder.empty() ? 1 : 0);
  require(inputs == 1, "ingest requires exactly one of --video, --input_folder");
  require(!cfg.output_folder.empty(), "ingest requires --output_folder");

  fs::create_directories(cfg.output_folder);
  const PoseSequence seq = load_input(cfg, out, err);
  const fs::path dest = fs::path(cfg.output_folder) / (seq.source_id + ".seq.json");
  save_sequence(seq, dest);
  out << "Wrote " << dest.string() << " (" << seq.frames.size() << " frames)\n";
  return 0;
}

inline int cmd_train(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  require(!cfg.exercise.empty(), "train requires --exercise");
  require(!cfg.manifest.empty() || !cfg.input_folder.empty(),
          "train requires --manifest or --input_folder");
  require(!cfg.output_folder.empty(), "train requires --output_folder");

  const ExerciseKind exercise = parse_exercise(cfg.exercise);
  DatasetIndex index;
  index.exercise = exercise;
  index.feature_hash = feature_config_hash(exercise);

  if (!cfg.manifest.empty()) {
    for (const ManifestEntry& e : load_manifest(cfg.manifest)) {
      if (e.exercise != exercise)
        throw DatasetError("manifest entry '" + e.path.string() +
                           "' is for a different exercise than --exercise");
      index.entries.push_back(IndexEntry{fs::absolute(e.path).string(), e.label,
                                         sequence_source_id(e.path)});
    }
  } else {
    for (const auto& file : list_frame_files(cfg.input_folder, "*.seq.json")) {
      const std::string source_id = sequence_source_id(file);
      const auto label = label_from_filename(source_id);
      if (!label) {
        err << "warning: " << file.string()
            << ": file name carries no good/bad label; skipped\n";
        continue;
      }
      index.entries.push_back(IndexEntry{fs::absolute(file).string(), *label, source_id});
    }
  }

  if (index.entries.empty()) throw DatasetError("no labeled sequences found for training");
  std::size_t n_correct = 0;
  for (const IndexEntry& e : index.entries)
    if (e.label == FormLabel::correct) ++n_correct;
  if (n_correct == 0 || n_correct == index.entries.size())
    err << "warning: dataset contains a single label; classification will be degenerate\n";

  fs::create_directories(cfg.output_folder);
  const fs::path dest = fs::path(cfg.output_folder) / "dataset_index.json";
  save_index(index, dest);
  out << "Indexed " << index.entries.size() << " sequences (" << n_correct << " correct, "
      << index.entries.size() - n_correct << " incorrect) to " << dest.string() << "\n";
  return 0;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  namespace fs = std::filesystem;
  require(!cfg.sequence.empty(), "classify requires --sequence");
  require(!cfg.input_folder.empty(),
          "classify requires --input_folder (the folder holding dataset_index.json)");

  const DatasetIndex index = load_index(fs::path(cfg.input_folder) / "dataset_index.json");
  if (!cfg.exercise.empty() && parse_exercise(cfg.exercise) != index.exercise)
    throw DatasetError("query exercise does not match the dataset index");
  check_feature_hash(index);

  const LabeledDataset train = load_labeled_dataset(index, cfg.input_folder);
  const PoseSequence seq = load_saved(cfg.sequence);
  const FeatureSeries query = featurize(normalize_sequence(seq), index.exercise);
  const ClassifyResult result = classify(query, train);

  out << "Predicted label: " << label_name(result.label) << "\n";
  out << "Nearest neighbor: " << result.source_id << "\n";
  out << "DTW distance: " << format_double(result.distance) << "\n";
  return result.label == FormLabel::correct ? 0 : 2;
}

inline nlohmann::json metrics_record(const SplitMetrics& m, ExerciseKind exercise,
                                     std::uint64_t seed, double train_fraction) {
  const auto row = [](const MetricsRow& r) {
    return nlohmann::json{{"precision", r.precision},
                          {"recall", r.recall},
                          {"f1", r.f1},
                          {"support", r.support}};
  };
  return {
      {"schema_version", 1},
      {"exercise", exercise_name(exercise)},
      {"seed", seed},
      {"train_fraction", train_fraction},
      {"train_size", m.train_size},
      {"test_size", m.test_size},
      {"correct", row(m.correct)},
      {"incorrect", row(m.incorrect)},
      {"weighted", row(m.weighted)},
  };
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  namespace fs = std::filesystem;
  require(!cfg.input_folder.empty() || !cfg.manifest.empty(),
          "report requires --input_folder (index folder) or --manifest");
  require(!cfg.output_folder.empty(), "report requires --output_folder");

  LabeledDataset dataset;
  ExerciseKind exercise = ExerciseKind::bicep_curl;
  if (!cfg.input_folder.empty()) {
    const DatasetIndex index = load_index(fs::path(cfg.input_folder) / "dataset_index.json");
    check_feature_hash(index);
    exercise = index.exercise;
    dataset = load_labeled_dataset(index, cfg.input_folder);
  } else {
    const auto entries = load_manifest(cfg.manifest);
    if (entries.empty()) throw DatasetError("manifest lists no sequences");
    exercise = entries.front().exercise;
    dataset.exercise = exercise;
    for (const ManifestEntry& e : entries) {
      if (e.exercise != exercise)
        throw DatasetError("manifest mixes exercises; one report covers one exercise");
      const PoseSequence seq = load_saved(e.path);
      dataset.entries.push_back(TrainingEntry{featurize(normalize_sequence(seq), exercise),
                                              e.label, sequence_source_id(e.path)});
    }
  }

  const SplitMetrics metrics = evaluate_split(dataset, cfg.seed, cfg.train_fraction);
  char header[128];
  std::snprintf(header, sizeof(header), "Split: %zu train / %zu test (seed=%llu, train_fraction=%.2f)\n",
                metrics.train_size, metrics.test_size,
                static_cast<unsigned long long>(cfg.seed), cfg.train_fraction);
  out << header << format_metrics_table(metrics);

  fs::create_directories(cfg.output_folder);
  write_text_file(fs::path(cfg.output_folder) / "metrics.json",
                  metrics_record(metrics, exercise, cfg.seed, cfg.train_fraction).dump(2) + "\n");
  return 0;
}

}  // namespace cli_detail

/// Entry point behind the `posetrainer` binary; takes argv without the
/// program name. Exit codes: 0 for a correct verdict (or plain success),
/// 2 for an incorrect verdict, 1 for any error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exercise form evaluation from pose keypoint sequences", "posetrainer"};
  app.add_option("--mode", cfg.mode, "evaluate | classify | train | report | ingest")
      ->required()
      ->check(CLI::IsMember({"evaluate", "classify", "train", "report", "ingest"}));
  app.add_option("--exercise", cfg.exercise,
                 "bicep_curl | front_raise | shoulder_shrug | shoulder_press")
      ->check(CLI::IsMember(
          {"bicep_curl", "front_raise", "shoulder_shrug", "shoulder_press"}));
  app.add_option("--video", cfg.video, "video file; needs the external pose estimator");
  app.add_option("--input_folder", cfg.input_folder,
                 "folder of per-frame keypoint files, saved sequences, or a dataset index");
  app.add_option("--sequence", cfg.sequence, "saved sequence file (.seq.json)");
  app.add_option("--output_folder", cfg.output_folder, "folder for records and plot data");
  app.add_option("--config", cfg.config_path, "threshold config file");
  app.add_option("--openpose_bin", cfg.openpose_bin,
                 "pose estimator executable (fallback: POSETRAINER_OPENPOSE_BIN)");
  app.add_option("--manifest", cfg.manifest, "dataset manifest: 'path label exercise' lines");
  app.add_option("--seed", cfg.seed, "split seed (classify/report)");
  app.add_option("--train_fraction", cfg.train_fraction, "training fraction (report)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cfg.mode == "evaluate") return cli_detail::cmd_evaluate(cfg, out, err);
    if (cfg.mode == "ingest") return cli_detail::cmd_ingest(cfg, out, err);
    if (cfg.mode == "train") return cli_detail::cmd_train(cfg, out, err);
    if (cfg.mode == "classify") return cli_detail::cmd_classify(cfg, out, err);
    if (cfg.mode == "report") return cli_detail::cmd_report(cfg, out, err);
    throw ParameterError("unknown mode: '" + cfg.mode + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace posetrainer
