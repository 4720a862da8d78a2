// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace scorpio {

/// Base class for every recoverable failure raised by the library.
/// The CLI maps any Error to exit code 2 (data/format error).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A pixel coordinate fell outside the frame; the message names the axis.
class CoordinateError : public Error {
public:
  using Error::Error;
};

/// Hue calibration failed (empty or out-of-range sample set).
class CalibrationError : public Error {
public:
  using Error::Error;
};

/// A line of an input stream could not be parsed at all.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_ = 0;
};

/// A line parsed but one of its fields violates the record contract.
class RecordError : public Error {
public:
  RecordError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_ = 0;
};

/// An argument violates an operation's precondition.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A metric is undefined for the given confusion matrix; names the metric.
class UndefinedMetricError : public Error {
public:
  using Error::Error;
};

/// Input lacks the variety an analysis needs (e.g. ROC without both labels).
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

/// A detection candidate is unusable; the message names the candidate index.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A file is structurally valid but uses an unsupported variant.
class FormatError : public Error {
public:
  using Error::Error;
};

/// The underlying byte stream is missing, truncated or unwritable.
class IoError : public Error {
public:
  using Error::Error;
};

/// A synthetic scene description is self-inconsistent.
class SceneSpecError : public Error {
public:
  using Error::Error;
};

/// A pipeline configuration document violates its schema.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace scorpio
