#pragma once

// Umbrella header: pose types, keypoint I/O, geometry, heuristics, the DTW
// classifier, dataset tooling, and the CLI driver.

#include "posetrainer/classifier.hpp"
#include "posetrainer/cli.hpp"
#include "posetrainer/dataset.hpp"
#include "posetrainer/errors.hpp"
#include "posetrainer/estimator.hpp"
#include "posetrainer/geometry.hpp"
#include "posetrainer/heuristics.hpp"
#include "posetrainer/pose.hpp"
#include "posetrainer/pose_io.hpp"
#include "posetrainer/series.hpp"
#include "posetrainer/synthetic.hpp"
