#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetrainer/errors.hpp"

namespace posetrainer {

/// Joint indices in the COCO-18 layout emitted by the upstream estimator.
enum class PartId : int {
  nose = 0,
  neck = 1,
  rshoulder = 2,
  relbow = 3,
  rwrist = 4,
  lshoulder = 5,
  lelbow = 6,
  lwrist = 7,
  rhip = 8,
  rknee = 9,
  rankle = 10,
  lhip = 11,
  lknee = 12,
  lankle = 13,
  reye = 14,
  leye = 15,
  rear = 16,
  lear = 17,
};

inline constexpr int kPartCount = 18;

inline constexpr std::array<const char*, kPartCount> kPartNames = {
    "nose",  "neck",  "rshoulder", "relbow", "rwrist", "lshoulder",
    "lelbow", "lwrist", "rhip",     "rknee",  "rankle", "lhip",
    "lknee", "lankle", "reye",      "leye",   "rear",   "lear",
};

inline const char* part_name(PartId id) { return kPartNames[static_cast<int>(id)]; }

/// One joint keypoint. Coordinates are image pixels, origin top-left.
/// An undetected joint has confidence 0 and zeroed coordinates; its
/// position must never enter a geometric computation.
struct Part {
  double x = 0.0;
  double y = 0.0;
  double confidence = 0.0;

  bool visible() const { return confidence > 0.0; }

  static Part at(double px, double py, double conf) {
    if (conf <= 0.0) return Part{};
    return Part{px, py, conf};
  }

  bool operator==(const Part&) const = default;
};

/// Full 18-joint skeleton estimate for one video frame.
struct Pose {
  std::array<Part, kPartCount> parts{};
  int frame_index = 0;

  const Part& part(PartId id) const { return parts[static_cast<std::size_t>(id)]; }
  Part& part(PartId id) { return parts[static_cast<std::size_t>(id)]; }

  const Part& nose() const { return part(PartId::nose); }
  const Part& neck() const { return part(PartId::neck); }
  const Part& rshoulder() const { return part(PartId::rshoulder); }
  const Part& relbow() const { return part(PartId::relbow); }
  const Part& rwrist() const { return part(PartId::rwrist); }
  const Part& lshoulder() const { return part(PartId::lshoulder); }
  const Part& lelbow() const { return part(PartId::lelbow); }
  const Part& lwrist() const { return part(PartId::lwrist); }
  const Part& rhip() const { return part(PartId::rhip); }
  const Part& rknee() const { return part(PartId::rknee); }
  const Part& rankle() const { return part(PartId::rankle); }
  const Part& lhip() const { return part(PartId::lhip); }
  const Part& lknee() const { return part(PartId::lknee); }
  const Part& lankle() const { return part(PartId::lankle); }
  const Part& reye() const { return part(PartId::reye); }
  const Part& leye() const { return part(PartId::leye); }
  const Part& rear() const { return part(PartId::rear); }
  const Part& lear() const { return part(PartId::lear); }

  bool operator==(const Pose&) const = default;
};

/// Ordered pose estimates for one video, frame indices contiguous from 0.
struct PoseSequence {
  std::vector<Pose> frames;
  std::string source_id;
  std::optional<double> frames_per_second;

  bool operator==(const PoseSequence&) const = default;
};

enum class ExerciseKind {
  bicep_curl,
  front_raise,
  shoulder_shrug,
  shoulder_press,
};

inline constexpr std::array<ExerciseKind, 4> kAllExercises = {
    ExerciseKind::bicep_curl,
    ExerciseKind::front_raise,
    ExerciseKind::shoulder_shrug,
    ExerciseKind::shoulder_press,
};

inline const char* exercise_name(ExerciseKind kind) {
  switch (kind) {
    case ExerciseKind::bicep_curl: return "bicep_curl";
    case ExerciseKind::front_raise: return "front_raise";
    case ExerciseKind::shoulder_shrug: return "shoulder_shrug";
    case ExerciseKind::shoulder_press: return "shoulder_press";
  }
  throw ParameterError("unknown exercise kind");
}

inline std::optional<ExerciseKind> exercise_from_name(std::string_view name) {
  for (ExerciseKind kind : kAllExercises)
    if (name == exercise_name(kind)) return kind;
  return std::nullopt;
}

inline ExerciseKind parse_exercise(std::string_view name) {
  if (auto kind = exercise_from_name(name)) return *kind;
  throw ParseError("unknown exercise: '" + std::string(name) + "'");
}

/// Binary form label shared by heuristic verdicts and classifier output.
enum class FormLabel { correct, incorrect };

inline const char* label_name(FormLabel label) {
  return label == FormLabel::correct ? "correct" : "incorrect";
}

inline FormLabel parse_label(std::string_view name) {
  if (name == "correct") return FormLabel::correct;
  if (name == "incorrect") return FormLabel::incorrect;
  throw ParseError("unknown label: '" + std::string(name) + "'");
}

/// Camera-facing body side; `both` marks exercises with no side ambiguity.
enum class Side { left, right, both };

inline const char* side_name(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::both: return "both";
  }
  throw ParameterError("unknown side");
}

}  // namespace posetrainer
