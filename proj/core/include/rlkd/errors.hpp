#pragma once

#include <stdexcept>
#include <string>

namespace rlkd {

/// Malformed input file (bad JSON, bad line structure). Messages carry the
/// offending line number where one exists.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates the documented schema
/// (inconsistent dimensions, out-of-range labels, empty dataset).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A required (instance, teacher) pair is missing from teacher predictions.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A supplied value fails a validation rule (e.g. probability row not
/// summing to one). Messages name the instance/teacher involved.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite value produced where the contract requires finite arithmetic
/// (NaN loss, diverging update). Messages name the epoch/batch when known.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad experiment configuration. Messages name the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reports that cannot be compared (different benchmarks, too few seeds).
class IncompatibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or unwritable file.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rlkd
