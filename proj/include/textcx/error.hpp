#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textcx {

// Base for every error raised by the library. Callers that only care about
// "bad data vs. bad usage" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes are not valid UTF-8.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : Error(what + " at byte offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Argument outside the mathematical domain of an operation (empty profile,
// d <= 0, alpha == 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Rank segment outside [1, D].
class BoundsError : public Error {
 public:
  using Error::Error;
};

// A regression has too few (or degenerate) points.
class FitError : public Error {
 public:
  using Error::Error;
};

// Statistics requested on too small or degenerate samples.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Filesystem or format problems; message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace textcx
