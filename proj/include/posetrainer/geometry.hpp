#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "posetrainer/errors.hpp"
#include "posetrainer/pose.hpp"
#include "posetrainer/series.hpp"

namespace posetrainer {

/// 2D body vector; units are pixels before normalization, torso lengths after.
struct Vec2 {
  double dx = 0.0;
  double dy = 0.0;

  double norm() const { return std::hypot(dx, dy); }
  double dot(const Vec2& o) const { return dx * o.dx + dy * o.dy; }
};

/// Vector from the position of `from` to the position of `to`.
/// Both parts must be visible for the result to be meaningful.
inline Vec2 vec_between(const Part& from, const Part& to) {
  return Vec2{to.x - from.x, to.y - from.y};
}

/// Unsigned angle between two vectors, in degrees, in [0, 180].
inline double angle_between(const Vec2& u, const Vec2& v) {
  const double nu = u.norm();
  const double nv = v.norm();
  if (nu == 0.0 || nv == 0.0)
    throw GeometryError("angle of a zero-length vector is undefined");
  const double c = std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
  return std::acos(c) * (180.0 / std::numbers::pi);
}

/// Torso length in pixels: mean distance from the neck to the visible hips.
/// Falls back to a single hip when the other is occluded.
inline double torso_length(const Pose& p) {
  if (!p.neck().visible())
    throw GeometryError("torso length undefined: neck not visible");
  const bool has_r = p.rhip().visible();
  const bool has_l = p.lhip().visible();
  if (!has_r && !has_l)
    throw GeometryError("torso length undefined: no visible hip");
  double sum = 0.0;
  int n = 0;
  if (has_r) {
    sum += vec_between(p.neck(), p.rhip()).norm();
    ++n;
  }
  if (has_l) {
    sum += vec_between(p.neck(), p.lhip()).norm();
    ++n;
  }
  return sum / n;
}

/// Per-frame torso lengths; holes where the torso is undefined.
inline OptionalSeries torso_lengths(const std::vector<Pose>& frames) {
  OptionalSeries out;
  out.reserve(frames.size());
  for (const Pose& p : frames) {
    try {
      out.push_back(torso_length(p));
    } catch (const GeometryError&) {
      out.push_back(std::nullopt);
    }
  }
  return out;
}

/// Relative spread (max - min) / median of the defined per-frame torso
/// lengths. Zero for a rigid subject.
inline double torso_length_spread(const std::vector<Pose>& frames) {
  Series defined;
  for (const auto& v : torso_lengths(frames))
    if (v.has_value()) defined.push_back(*v);
  if (defined.empty())
    throw GeometryError("torso length undefined in every frame");
  const double med = median_of(defined);
  if (med <= 0.0) throw GeometryError("degenerate torso: zero median length");
  return (max_value(defined) - min_value(defined)) / med;
}

/// A pose sequence with coordinates divided by the sequence torso length.
struct NormalizedSequence {
  std::vector<Pose> frames;
  double torso_length_px = 0.0;  // the divisor
  double torso_spread = 0.0;     // relative spread of per-frame torso lengths
  Side side = Side::both;
};

/// Divides every visible coordinate by the median per-frame torso length,
/// making all downstream distances ratios of torso length. Needs a defined
/// torso in at least half of the frames.
inline NormalizedSequence normalize_sequence(const PoseSequence& seq) {
  if (seq.frames.size() < 2)
    throw InsufficientDataError("normalization needs at least 2 frames");

  Series defined;
  for (const auto& v : torso_lengths(seq.frames))
    if (v.has_value()) defined.push_back(*v);
  if (defined.size() * 2 < seq.frames.size())
    throw GeometryError("torso undefined in more than half of the frames");

  const double divisor = median_of(defined);
  if (divisor <= 0.0)
    throw GeometryError("degenerate torso: non-positive median length");

  NormalizedSequence out;
  out.torso_length_px = divisor;
  out.torso_spread = (max_value(defined) - min_value(defined)) / divisor;
  out.frames = seq.frames;
  for (Pose& p : out.frames) {
    for (Part& part : p.parts) {
      if (part.visible()) {
        part.x /= divisor;
        part.y /= divisor;
      }
    }
  }
  return out;
}

/// Decides which arm faces the camera by summing the confidence of the
/// left-arm and right-arm keypoints over all frames. Ties break right.
inline Side detect_side(const std::vector<Pose>& frames) {
  if (frames.empty()) throw InsufficientDataError("perspective detection on an empty sequence");
  double left = 0.0;
  double right = 0.0;
  for (const Pose& p : frames) {
    left += p.lshoulder().confidence + p.lelbow().confidence + p.lwrist().confidence;
    right += p.rshoulder().confidence + p.relbow().confidence + p.rwrist().confidence;
  }
  if (left == 0.0 && right == 0.0)
    throw GeometryError("perspective undetectable: no arm keypoint visible in any frame");
  return left > right ? Side::left : Side::right;
}

inline Side detect_side(const PoseSequence& seq, ExerciseKind exercise) {
  if (exercise != ExerciseKind::bicep_curl)
    throw ParameterError("perspective detection applies only to side-dependent exercises");
  return detect_side(seq.frames);
}

}  // namespace posetrainer
