#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "posetrainer/errors.hpp"
#include "posetrainer/pose_io.hpp"

namespace posetrainer {

/// Runs the external pose-estimator executable on a video file, writing one
/// keypoint file per frame into `json_dir`, and returns the emitted files in
/// temporal order. The estimator is an optional runtime dependency only; a
/// missing executable is a clean error, never a build requirement.
inline std::vector<std::filesystem::path> run_estimator(const std::filesystem::path& video,
                                                        const std::filesystem::path& estimator_bin,
                                                        const std::filesystem::path& json_dir) {
  namespace fs = std::filesystem;
  if (!fs::exists(video)) throw IoError("video file not found: " + video.string());
  if (estimator_bin.empty() || !fs::exists(estimator_bin))
    throw EstimatorError("pose estimator executable not found: '" + estimator_bin.string() +
                         "'; pass --openpose_bin or set POSETRAINER_OPENPOSE_BIN");
  fs::create_directories(json_dir);

  const std::string cmd = "\"" + estimator_bin.string() + "\" --video \"" + video.string() +
                          "\" --write_json \"" + json_dir.string() + "\"";
  const int status = std::system(cmd.c_str());
  if (status != 0)
    throw EstimatorError("pose estimator exited with status " + std::to_string(status));

  auto files = list_frame_files(json_dir, "*.json");
  if (files.empty())
    throw EstimatorError("pose estimator produced no keypoint files in " + json_dir.string());
  return files;
}

}  // namespace posetrainer
