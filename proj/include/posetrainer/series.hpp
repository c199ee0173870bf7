#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "posetrainer/errors.hpp"

namespace posetrainer {

/// Per-frame scalar track: an angle in degrees or a position in torso units.
using Series = std::vector<double>;

/// Scalar track with holes at frames where a needed keypoint was not visible.
using OptionalSeries = std::vector<std::optional<double>>;

/// Median of `values`; for even sizes, the mean of the two middle elements.
inline double median_of(Series values) {
  if (values.empty()) throw ParameterError("median of an empty series");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

inline double min_value(const Series& s) {
  if (s.empty()) throw ParameterError("min of an empty series");
  return *std::min_element(s.begin(), s.end());
}

inline double max_value(const Series& s) {
  if (s.empty()) throw ParameterError("max of an empty series");
  return *std::max_element(s.begin(), s.end());
}

inline double value_range(const Series& s) { return max_value(s) - min_value(s); }

/// Sliding-window median with replicate (nearest-value) edge padding, so the
/// first and last values are not dragged toward zero. Output length equals
/// input length; `window` must be odd and positive.
inline Series median_filter(const Series& s, int window = 5) {
  if (window < 1 || window % 2 == 0)
    throw ParameterError("median filter window must be a positive odd integer");
  if (s.empty()) throw ParameterError("median filter input is empty");

  const std::size_t half = static_cast<std::size_t>(window) / 2;
  Series padded;
  padded.reserve(s.size() + 2 * half);
  padded.insert(padded.end(), half, s.front());
  padded.insert(padded.end(), s.begin(), s.end());
  padded.insert(padded.end(), half, s.back());

  Series out(s.size());
  Series win(static_cast<std::size_t>(window));
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::copy(padded.begin() + static_cast<std::ptrdiff_t>(i),
              padded.begin() + static_cast<std::ptrdiff_t>(i) + window, win.begin());
    std::nth_element(win.begin(), win.begin() + static_cast<std::ptrdiff_t>(half), win.end());
    out[i] = win[half];
  }
  return out;
}

/// Double pass of the size-5 median filter: the smoothing step applied to
/// every keypoint-derived track before thresholds or distances are computed.
inline Series smooth(const Series& s) { return median_filter(median_filter(s, 5), 5); }

/// Fills holes: interior runs by linear interpolation between the nearest
/// defined neighbours, leading and trailing runs by replicating the nearest
/// defined value. Needs at least two defined entries.
inline Series fill_gaps(const OptionalSeries& s) {
  std::vector<std::size_t> defined;
  defined.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].has_value()) defined.push_back(i);
  if (defined.size() < 2)
    throw InsufficientDataError("fill_gaps needs at least 2 defined values");

  Series out(s.size());
  for (std::size_t i = 0; i < defined.front(); ++i) out[i] = *s[defined.front()];
  for (std::size_t i = defined.back(); i < s.size(); ++i) out[i] = *s[defined.back()];
  for (std::size_t k = 0; k + 1 < defined.size(); ++k) {
    const std::size_t a = defined[k];
    const std::size_t b = defined[k + 1];
    const double va = *s[a];
    const double vb = *s[b];
    out[a] = va;
    for (std::size_t i = a + 1; i < b; ++i)
      out[i] = va + (vb - va) * (static_cast<double>(i - a) / static_cast<double>(b - a));
  }
  out[defined.back()] = *s[defined.back()];
  return out;
}

}  // namespace posetrainer
