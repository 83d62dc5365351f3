#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndthin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on coordinates or arguments was violated by the caller.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The operation is only defined for a different number of dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A metric is undefined for the given input (e.g. a zero denominator).
class MetricError : public Error {
 public:
  using Error::Error;
};

/// A generated solid would touch the grid boundary.
class MarginError : public Error {
 public:
  using Error::Error;
};

/// A pattern file could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class ScheduleError : public Error {
 public:
  using Error::Error;
};

/// Malformed pattern file. `offset()` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ndthin
