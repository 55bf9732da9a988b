#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

/// Precondition on an argument was violated (bad order, empty list, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix or tuple shapes do not agree.
class DimensionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Input values are unusable (non-finite, non-numeric, empty table).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A serialized ensemble is malformed: bad magic, version, truncation, checksum.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hgc
