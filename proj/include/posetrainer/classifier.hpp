#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "posetrainer/errors.hpp"
#include "posetrainer/geometry.hpp"
#include "posetrainer/pose.hpp"
#include "posetrainer/series.hpp"

namespace posetrainer {

/// Fixed-dimensionality feature vectors, one per frame, derived from a
/// gap-filled and double-median-filtered normalized sequence.
struct FeatureSeries {
  std::vector<std::vector<double>> frames;
  ExerciseKind exercise = ExerciseKind::bicep_curl;

  std::size_t dim() const { return frames.empty() ? 0 : frames.front().size(); }
};

/// Joints whose neck-relative coordinates form the feature vector. The bicep
/// curl uses the active-side arm chain; the two-arm exercises use both arms
/// plus the neck and hips.
inline std::vector<PartId> feature_joints(ExerciseKind exercise, Side side) {
  if (exercise == ExerciseKind::bicep_curl) {
    if (side == Side::left)
      return {PartId::lshoulder, PartId::lelbow, PartId::lwrist, PartId::neck, PartId::lhip};
    return {PartId::rshoulder, PartId::relbow, PartId::rwrist, PartId::neck, PartId::rhip};
  }
  return {PartId::rshoulder, PartId::relbow, PartId::rwrist,
          PartId::lshoulder, PartId::lelbow, PartId::lwrist,
          PartId::neck,      PartId::rhip,   PartId::lhip};
}

namespace detail {

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string to_hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

}  // namespace detail

/// Stable hash of the featurization recipe; persisted in dataset indexes so
/// stale indexes are detected instead of silently misclassifying.
inline std::string feature_config_hash(ExerciseKind exercise) {
  std::string desc = std::string(exercise_name(exercise)) + "|neck_relative|window=5|passes=2|";
  if (exercise == ExerciseKind::bicep_curl)
    desc += "side_shoulder,side_elbow,side_wrist,neck,side_hip";
  else
    desc += "rshoulder,relbow,rwrist,lshoulder,lelbow,lwrist,neck,rhip,lhip";
  return detail::to_hex(detail::fnv1a64(desc));
}

/// Builds the per-frame feature vectors: normalized (x, y) of the
/// exercise-relevant joints, each expressed relative to that frame's neck
/// position, then gap-filled and smoothed channel by channel.
inline FeatureSeries featurize(const NormalizedSequence& seq, ExerciseKind exercise) {
  if (seq.frames.size() < 2)
    throw InsufficientDataError("featurization needs at least 2 frames");

  Side side = Side::both;
  if (exercise == ExerciseKind::bicep_curl)
    side = seq.side == Side::both ? detect_side(seq.frames) : seq.side;

  const std::vector<PartId> joints = feature_joints(exercise, side);
  const std::size_t dim = 2 * joints.size();

  std::vector<OptionalSeries> channels(dim, OptionalSeries(seq.frames.size()));
  for (std::size_t t = 0; t < seq.frames.size(); ++t) {
    const Pose& p = seq.frames[t];
    if (!p.neck().visible()) continue;
    for (std::size_t j = 0; j < joints.size(); ++j) {
      const Part& part = p.part(joints[j]);
      if (!part.visible()) continue;
      channels[2 * j][t] = part.x - p.neck().x;
      channels[2 * j + 1][t] = part.y - p.neck().y;
    }
  }

  std::vector<Series> prepared(dim);
  for (std::size_t j = 0; j < joints.size(); ++j) {
    for (int axis = 0; axis < 2; ++axis) {
      const std::size_t ch = 2 * j + static_cast<std::size_t>(axis);
      try {
        prepared[ch] = smooth(fill_gaps(channels[ch]));
      } catch (const InsufficientDataError&) {
        throw EvaluationError(std::string("featurization failed: keypoint '") +
                              part_name(joints[j]) + "' (or the neck) visible in too few frames");
      }
    }
  }

  FeatureSeries out;
  out.exercise = exercise;
  out.frames.assign(seq.frames.size(), std::vector<double>(dim));
  for (std::size_t t = 0; t < seq.frames.size(); ++t)
    for (std::size_t ch = 0; ch < dim; ++ch) out.frames[t][ch] = prepared[ch][t];
  return out;
}

namespace detail {

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// Dynamic-time-warping distance between two sequences of equal-dimension
/// points: the minimal cumulative Euclidean cost over all monotone alignment
/// paths, via the classic three-way dynamic program
/// G(i,j) = D(i,j) + min(G(i-1,j), G(i,j-1), G(i-1,j-1)).
inline double dtw_distance(const std::vector<std::vector<double>>& q,
                           const std::vector<std::vector<double>>& c) {
  if (q.empty() || c.empty()) throw ParameterError("DTW of an empty series");
  const std::size_t dim = q.front().size();
  for (const auto& row : q)
    if (row.size() != dim) throw ParameterError("DTW input is not rectangular");
  for (const auto& row : c)
    if (row.size() != dim) throw ParameterError("DTW dimensionality mismatch");

  const std::size_t m = q.size();
  const std::size_t n = c.size();
  std::vector<double> prev(n), curr(n);

  prev[0] = detail::euclidean(q[0], c[0]);
  for (std::size_t j = 1; j < n; ++j) prev[j] = detail::euclidean(q[0], c[j]) + prev[j - 1];

  for (std::size_t i = 1; i < m; ++i) {
    curr[0] = detail::euclidean(q[i], c[0]) + prev[0];
    for (std::size_t j = 1; j < n; ++j) {
      const double best = std::min({prev[j], curr[j - 1], prev[j - 1]});
      curr[j] = detail::euclidean(q[i], c[j]) + best;
    }
    std::swap(prev, curr);
  }
  return prev[n - 1];
}

/// Scalar-channel convenience overload.
inline double dtw_distance(const Series& q, const Series& c) {
  std::vector<std::vector<double>> qv, cv;
  qv.reserve(q.size());
  cv.reserve(c.size());
  for (double v : q) qv.push_back({v});
  for (double v : c) cv.push_back({v});
  return dtw_distance(qv, cv);
}

inline double dtw_distance(const FeatureSeries& q, const FeatureSeries& c) {
  return dtw_distance(q.frames, c.frames);
}

struct TrainingEntry {
  FeatureSeries features;
  FormLabel label = FormLabel::correct;
  std::string source_id;
};

/// Labeled reference sequences for one exercise.
struct LabeledDataset {
  ExerciseKind exercise = ExerciseKind::bicep_curl;
  std::vector<TrainingEntry> entries;
};

struct ClassifyResult {
  FormLabel label = FormLabel::incorrect;
  double distance = 0.0;
  std::string source_id;
};

/// 1-nearest-neighbour prediction over DTW distances. Exact distance ties
/// across labels resolve to `incorrect`; otherwise the result is invariant
/// under reordering of the training set.
inline ClassifyResult classify(const FeatureSeries& query, const LabeledDataset& train) {
  if (train.entries.empty()) throw DatasetError("classification against an empty training set");
  if (query.exercise != train.exercise)
    throw DatasetError("query exercise does not match the training set");

  std::vector<double> dists;
  dists.reserve(train.entries.size());
  for (const TrainingEntry& e : train.entries)
    dists.push_back(dtw_distance(query, e.features));

  const double best = *std::min_element(dists.begin(), dists.end());
  for (std::size_t i = 0; i < dists.size(); ++i)
    if (dists[i] == best && train.entries[i].label == FormLabel::incorrect)
      return ClassifyResult{FormLabel::incorrect, best, train.entries[i].source_id};
  for (std::size_t i = 0; i < dists.size(); ++i)
    if (dists[i] == best)
      return ClassifyResult{train.entries[i].label, best, train.entries[i].source_id};
  throw Error("unreachable: no nearest neighbour found");
}

}  // namespace posetrainer
