#pragma once

#include <stdexcept>
#include <string>

namespace posetrainer {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed structured-text content (keypoint files, sequence files, indexes).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A persisted file declares a schema version this build does not understand.
class SchemaVersionError : public ParseError {
public:
  using ParseError::ParseError;
};

/// A keypoint frame contains no detected person.
class EmptyFrameError : public Error {
public:
  using Error::Error;
};

/// Fewer frames or defined samples than an operation needs.
class InsufficientDataError : public Error {
public:
  using Error::Error;
};

/// Filesystem-level failure (missing path, unreadable or unwritable file).
class IoError : public Error {
public:
  using Error::Error;
};

/// Invalid argument or configuration value.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Degenerate vector, undefined torso, failed normalization or perspective.
class GeometryError : public Error {
public:
  using Error::Error;
};

/// A heuristic or featurization step could not run on the given sequence.
class EvaluationError : public Error {
public:
  using Error::Error;
};

/// Labeled-dataset problems: manifests, indexes, splits, stale feature config.
class DatasetError : public Error {
public:
  using Error::Error;
};

/// The external pose-estimator executable is missing or failed.
class EstimatorError : public Error {
public:
  using Error::Error;
};

}  // namespace posetrainer
