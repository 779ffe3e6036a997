#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crdyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A distance or extremum was requested on the empty set.
class EmptySetError : public Error {
 public:
  EmptySetError() : Error("operation requires a non-empty set") {}
};

/// F^step(x) turned out empty while iterating.
class EmptyImageError : public Error {
 public:
  explicit EmptyImageError(std::size_t step)
      : Error("empty image at iterate " + std::to_string(step)), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class BadRangeError : public Error {
 public:
  BadRangeError(std::size_t k, std::size_t l)
      : Error("bad orbit range: k=" + std::to_string(k) + " > l=" + std::to_string(l)) {}
};

class NonPositiveGapError : public Error {
 public:
  explicit NonPositiveGapError(std::size_t segment)
      : Error("segment " + std::to_string(segment) + " does not start after the previous one ends"),
        segment_(segment) {}

  std::size_t segment() const noexcept { return segment_; }

 private:
  std::size_t segment_;
};

class NoPreimageError : public Error {
 public:
  NoPreimageError() : Error("no point reaches the requested target") {}
};

class SizeMismatchError : public Error {
 public:
  SizeMismatchError(std::size_t expected, std::size_t got)
      : Error("size mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

}  // namespace crdyn
