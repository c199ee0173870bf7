#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetrainer/classifier.hpp"
#include "posetrainer/errors.hpp"
#include "posetrainer/geometry.hpp"
#include "posetrainer/pose.hpp"
#include "posetrainer/pose_io.hpp"

namespace posetrainer {

inline constexpr int kIndexSchemaVersion = 1;

struct MetricsRow {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

/// Per-class precision/recall/F1 plus the support-weighted average row.
struct SplitMetrics {
  MetricsRow correct;
  MetricsRow incorrect;
  MetricsRow weighted;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
};

namespace detail {

inline MetricsRow class_row(const std::vector<FormLabel>& truth,
                            const std::vector<FormLabel>& predicted, FormLabel cls) {
  std::size_t tp = 0, fp = 0, fn = 0, support = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == cls) ++support;
    if (predicted[i] == cls && truth[i] == cls) ++tp;
    if (predicted[i] == cls && truth[i] != cls) ++fp;
    if (predicted[i] != cls && truth[i] == cls) ++fn;
  }
  MetricsRow row;
  row.support = support;
  row.precision = (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  row.recall = (tp + fn) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  row.f1 = (row.precision + row.recall) > 0.0
               ? 2.0 * row.precision * row.recall / (row.precision + row.recall)
               : 0.0;
  return row;
}

/// Fisher-Yates with an explicit engine so results are reproducible across
/// standard-library implementations.
template <typename T>
inline void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace detail

/// Standard per-class precision/recall/F1 with a support-weighted average.
inline SplitMetrics compute_metrics(const std::vector<FormLabel>& truth,
                                    const std::vector<FormLabel>& predicted) {
  if (truth.size() != predicted.size() || truth.empty())
    throw ParameterError("metrics need equal-sized, non-empty truth and prediction lists");
  SplitMetrics m;
  m.correct = detail::class_row(truth, predicted, FormLabel::correct);
  m.incorrect = detail::class_row(truth, predicted, FormLabel::incorrect);
  const double total = static_cast<double>(truth.size());
  const auto weigh = [&](double c, double i) {
    return (c * static_cast<double>(m.correct.support) +
            i * static_cast<double>(m.incorrect.support)) /
           total;
  };
  m.weighted.precision = weigh(m.correct.precision, m.incorrect.precision);
  m.weighted.recall = weigh(m.correct.recall, m.incorrect.recall);
  m.weighted.f1 = weigh(m.correct.f1, m.incorrect.f1);
  m.weighted.support = truth.size();
  m.test_size = truth.size();
  return m;
}

/// Seeded, label-stratified train/test split followed by 1-NN classification
/// of every test entry against the training portion. Per label group the
/// training count is floor(train_fraction * group size); a group whose
/// training count would be zero makes the split degenerate.
inline SplitMetrics evaluate_split(const LabeledDataset& data, std::uint64_t seed,
                                   double train_fraction) {
  if (!(train_fraction > 0.0) || !(train_fraction <= 1.0))
    throw ParameterError("train_fraction must lie in (0, 1]");

  std::vector<std::size_t> group_correct, group_incorrect;
  for (std::size_t i = 0; i < data.entries.size(); ++i) {
    (data.entries[i].label == FormLabel::correct ? group_correct : group_incorrect).push_back(i);
  }

  std::mt19937_64 rng(seed);
  detail::deterministic_shuffle(group_correct, rng);
  detail::deterministic_shuffle(group_incorrect, rng);

  std::vector<bool> in_train(data.entries.size(), false);
  std::size_t train_count = 0;
  for (const auto* group : {&group_correct, &group_incorrect}) {
    const std::size_t n_train =
        static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(group->size())));
    if (n_train == 0)
      throw DatasetError(
          "degenerate split: a label would be absent from the training portion");
    for (std::size_t k = 0; k < n_train; ++k) in_train[(*group)[k]] = true;
    train_count += n_train;
  }

  LabeledDataset train;
  train.exercise = data.exercise;
  for (std::size_t i = 0; i < data.entries.size(); ++i)
    if (in_train[i]) train.entries.push_back(data.entries[i]);

  std::vector<FormLabel> truth, predicted;
  for (std::size_t i = 0; i < data.entries.size(); ++i) {
    if (in_train[i]) continue;
    truth.push_back(data.entries[i].label);
    predicted.push_back(classify(data.entries[i].features, train).label);
  }
  if (truth.empty()) throw DatasetError("degenerate split: empty test portion");

  SplitMetrics m = compute_metrics(truth, predicted);
  m.train_size = train_count;
  return m;
}

/// Renders metrics as the standard report table:
/// rows Correct / Incorrect / Avg/Total, columns Precision, Recall,
/// F1 Score, Examples.
inline std::string format_metrics_table(const SplitMetrics& m) {
  char line[128];
  std::string out;
  std::snprintf(line, sizeof(line), "%-10s%10s%10s%10s%10s\n", "", "Precision", "Recall",
                "F1 Score", "Examples");
  out += line;
  const auto row = [&](const char* label, const MetricsRow& r) {
    std::snprintf(line, sizeof(line), "%-10s%10.2f%10.2f%10.2f%10zu\n", label, r.precision,
                  r.recall, r.f1, r.support);
    out += line;
  };
  row("Correct", m.correct);
  row("Incorrect", m.incorrect);
  row("Avg/Total", m.weighted);
  return out;
}

/// Infers a label from a file name containing "good" or "bad" (the recording
/// convention for reference videos). Ambiguous or unmarked names yield
/// nothing.
inline std::optional<FormLabel> label_from_filename(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const bool good = lower.find("good") != std::string::npos;
  const bool bad = lower.find("bad") != std::string::npos;
  if (good == bad) return std::nullopt;
  return good ? FormLabel::correct : FormLabel::incorrect;
}

struct ManifestEntry {
  std::filesystem::path path;
  FormLabel label = FormLabel::correct;
  ExerciseKind exercise = ExerciseKind::bicep_curl;
};

/// Reads a dataset manifest: one `path label exercise` record per line,
/// whitespace-separated, `#` comments. The manifest takes precedence over
/// any file-name labeling convention.
inline std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path.string());
  std::vector<ManifestEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string p, label, exercise, extra;
    if (!(fields >> p)) continue;  // blank line
    if (!(fields >> label >> exercise) || (fields >> extra))
      throw DatasetError("manifest line " + std::to_string(lineno) +
                         ": expected 'path label exercise'");
    ManifestEntry e;
    e.path = p;
    try {
      e.label = parse_label(label);
      e.exercise = parse_exercise(exercise);
    } catch (const ParseError& err) {
      throw DatasetError("manifest line " + std::to_string(lineno) + ": " + err.what());
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

struct IndexEntry {
  std::string path;
  FormLabel label = FormLabel::correct;
  std::string source_id;
};

/// Persisted dataset index: the sequences to train against, their labels,
/// and the featurization recipe hash they were indexed under.
struct DatasetIndex {
  ExerciseKind exercise = ExerciseKind::bicep_curl;
  std::string feature_hash;
  std::vector<IndexEntry> entries;
};

inline void save_index(const DatasetIndex& index, const std::filesystem::path& path) {
  nlohmann::json entries = nlohmann::json::array();
  for (const IndexEntry& e : index.entries)
    entries.push_back({{"path", e.path}, {"label", label_name(e.label)},
                       {"source_id", e.source_id}});
  const nlohmann::json doc = {
      {"schema_version", kIndexSchemaVersion},
      {"exercise", exercise_name(index.exercise)},
      {"feature_config_hash", index.feature_hash},
      {"entries", std::move(entries)},
  };
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open index for writing: " + path.string());
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("cannot write index: " + path.string());
}

inline DatasetIndex load_index(const std::filesystem::path& path) {
  const std::string content = detail::read_file(path);
  nlohmann::json doc = nlohmann::json::parse(content, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw ParseError("dataset index is not a valid document: " + path.string());
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
    throw ParseError("dataset index has no schema version");
  if (doc["schema_version"].get<int>() != kIndexSchemaVersion)
    throw SchemaVersionError("unsupported index schema version " +
                             std::to_string(doc["schema_version"].get<int>()));
  if (!doc.contains("exercise") || !doc["exercise"].is_string() ||
      !doc.contains("feature_config_hash") || !doc["feature_config_hash"].is_string() ||
      !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("malformed dataset index: " + path.string());

  DatasetIndex index;
  index.exercise = parse_exercise(doc["exercise"].get<std::string>());
  index.feature_hash = doc["feature_config_hash"].get<std::string>();
  for (const auto& e : doc["entries"]) {
    if (!e.is_object() || !e.contains("path") || !e.contains("label") ||
        !e.contains("source_id"))
      throw ParseError("malformed dataset index entry");
    index.entries.push_back(IndexEntry{e["path"].get<std::string>(),
                                       parse_label(e["label"].get<std::string>()),
                                       e["source_id"].get<std::string>()});
  }
  return index;
}

/// Errors when the index was built under a different featurization recipe.
inline void check_feature_hash(const DatasetIndex& index) {
  if (index.feature_hash != feature_config_hash(index.exercise))
    throw DatasetError(
        "dataset index is stale: the featurization configuration changed; re-run training");
}

/// Loads and featurizes every sequence named by an index. Relative entry
/// paths are resolved against `base_dir`.
inline LabeledDataset load_labeled_dataset(const DatasetIndex& index,
                                           const std::filesystem::path& base_dir = {}) {
  LabeledDataset ds;
  ds.exercise = index.exercise;
  for (const IndexEntry& e : index.entries) {
    std::filesystem::path p(e.path);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    const PoseSequence seq = load_saved(p);
    const NormalizedSequence normalized = normalize_sequence(seq);
    ds.entries.push_back(
        TrainingEntry{featurize(normalized, index.exercise), e.label, e.source_id});
  }
  return ds;
}

}  // namespace posetrainer
