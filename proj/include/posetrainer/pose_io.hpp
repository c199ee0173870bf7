#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetrainer/errors.hpp"
#include "posetrainer/pose.hpp"

namespace posetrainer {

inline constexpr int kSequenceSchemaVersion = 1;

/// Shell-style wildcard match supporting `*` and `?`.
inline bool glob_match(std::string_view pattern, std::string_view name) {
  std::size_t p = 0, n = 0;
  std::size_t star = std::string_view::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read file: " + path.string());
  return buf.str();
}

inline double require_finite_number(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(std::string(what) + " is not finite");
  return d;
}

inline Part part_from_triple(double x, double y, double c, const char* what) {
  if (c < 0.0 || c > 1.0)
    throw ParseError(std::string(what) + " confidence outside [0, 1]");
  return Part::at(x, y, c);
}

}  // namespace detail

/// Parses one per-frame keypoint file: a document with a top-level `people`
/// list, each entry carrying a flat `pose_keypoints_2d` array of 54 numbers
/// ([x0, y0, c0, ..., x17, y17, c17]). With several detected people, keeps
/// the one with the highest summed confidence. Joints with confidence 0 are
/// marked not visible and their coordinates zeroed.
inline Pose parse_frame_file(const std::string& content) {
  nlohmann::json doc = nlohmann::json::parse(content, nullptr, false);
  if (doc.is_discarded()) throw ParseError("keypoint frame is not valid JSON");
  if (!doc.is_object() || !doc.contains("people") || !doc["people"].is_array())
    throw ParseError("keypoint frame has no 'people' list");

  const auto& people = doc["people"];
  if (people.empty()) throw EmptyFrameError("keypoint frame contains no detected person");

  Pose best;
  double best_sum = -1.0;
  for (const auto& person : people) {
    if (!person.is_object() || !person.contains("pose_keypoints_2d") ||
        !person["pose_keypoints_2d"].is_array())
      throw ParseError("person entry has no 'pose_keypoints_2d' array");
    const auto& flat = person["pose_keypoints_2d"];
    if (flat.size() != static_cast<std::size_t>(3 * kPartCount))
      throw ParseError("'pose_keypoints_2d' must hold exactly 54 numbers");

    Pose pose;
    double sum = 0.0;
    for (int i = 0; i < kPartCount; ++i) {
      const double x = detail::require_finite_number(flat[3 * i], "keypoint x");
      const double y = detail::require_finite_number(flat[3 * i + 1], "keypoint y");
      const double c = detail::require_finite_number(flat[3 * i + 2], "keypoint confidence");
      pose.parts[static_cast<std::size_t>(i)] = detail::part_from_triple(x, y, c, "keypoint");
      sum += c;
    }
    if (sum > best_sum) {
      best_sum = sum;
      best = pose;
    }
  }
  return best;
}

/// Lists regular files in `dir` whose names match `pattern`, sorted by file
/// name; lexicographic order is the temporal order of estimator output.
inline std::vector<std::filesystem::path> list_frame_files(
    const std::filesystem::path& dir, std::string_view pattern = "*.json") {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && glob_match(pattern, entry.path().filename().string()))
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

using WarningSink = std::function<void(const std::string&)>;

/// Loads an ordered list of per-frame keypoint files into a sequence.
/// Frames with no detected person are dropped with a warning and the
/// remaining frame indices re-compacted from 0.
inline PoseSequence load_sequence(const std::vector<std::filesystem::path>& frame_files,
                                  std::string source_id, const WarningSink& warn = {}) {
  if (frame_files.size() < 2)
    throw InsufficientDataError("a sequence needs at least 2 frame files");

  const auto emit = [&warn](const std::string& msg) {
    if (warn)
      warn(msg);
    else
      std::cerr << "warning: " << msg << "\n";
  };

  PoseSequence seq;
  seq.source_id = std::move(source_id);
  for (const auto& file : frame_files) {
    try {
      Pose pose = parse_frame_file(detail::read_file(file));
      pose.frame_index = static_cast<int>(seq.frames.size());
      seq.frames.push_back(pose);
    } catch (const EmptyFrameError&) {
      emit(file.string() + ": no person detected; frame dropped");
    }
  }
  if (seq.frames.size() < 2)
    throw InsufficientDataError("fewer than 2 usable frames in sequence '" + seq.source_id + "'");
  return seq;
}

/// Writes a sequence to the internal single-document format (schema version,
/// source id, frame array). Round-trips coordinates and confidences exactly.
inline void save_sequence(const PoseSequence& seq, const std::filesystem::path& path) {
  nlohmann::json frames = nlohmann::json::array();
  for (const Pose& p : seq.frames) {
    nlohmann::json parts = nlohmann::json::array();
    for (const Part& part : p.parts)
      parts.push_back({part.x, part.y, part.confidence});
    frames.push_back({{"frame_index", p.frame_index}, {"parts", std::move(parts)}});
  }
  nlohmann::json doc = {
      {"schema_version", kSequenceSchemaVersion},
      {"source_id", seq.source_id},
      {"frames_per_second",
       seq.frames_per_second ? nlohmann::json(*seq.frames_per_second) : nlohmann::json()},
      {"frames", std::move(frames)},
  };
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("cannot write file: " + path.string());
}

/// Reads a sequence written by save_sequence.
inline PoseSequence load_saved(const std::filesystem::path& path) {
  const std::string content = detail::read_file(path);
  if (content.empty()) throw ParseError("empty sequence file: " + path.string());

  nlohmann::json doc = nlohmann::json::parse(content, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw ParseError("sequence file is not a valid document: " + path.string());

  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
    throw ParseError("sequence file has no schema version");
  const int version = doc["schema_version"].get<int>();
  if (version != kSequenceSchemaVersion)
    throw SchemaVersionError("unsupported sequence schema version " + std::to_string(version));

  if (!doc.contains("source_id") || !doc["source_id"].is_string())
    throw ParseError("sequence file has no source_id");
  if (!doc.contains("frames") || !doc["frames"].is_array())
    throw ParseError("sequence file has no frames array");

  PoseSequence seq;
  seq.source_id = doc["source_id"].get<std::string>();
  if (doc.contains("frames_per_second") && !doc["frames_per_second"].is_null())
    seq.frames_per_second =
        detail::require_finite_number(doc["frames_per_second"], "frames_per_second");

  int expected_index = 0;
  for (const auto& frame : doc["frames"]) {
    if (!frame.is_object() || !frame.contains("frame_index") || !frame.contains("parts") ||
        !frame["parts"].is_array() ||
        frame["parts"].size() != static_cast<std::size_t>(kPartCount))
      throw ParseError("malformed frame entry in sequence file");
    Pose pose;
    pose.frame_index = frame["frame_index"].get<int>();
    if (pose.frame_index != expected_index++)
      throw ParseError("frame indices are not contiguous from 0");
    for (int i = 0; i < kPartCount; ++i) {
      const auto& triple = frame["parts"][static_cast<std::size_t>(i)];
      if (!triple.is_array() || triple.size() != 3)
        throw ParseError("malformed part triple in sequence file");
      const double x = detail::require_finite_number(triple[0], "part x");
      const double y = detail::require_finite_number(triple[1], "part y");
      const double c = detail::require_finite_number(triple[2], "part confidence");
      pose.parts[static_cast<std::size_t>(i)] = detail::part_from_triple(x, y, c, "part");
    }
    seq.frames.push_back(pose);
  }
  return seq;
}

}  // namespace posetrainer
