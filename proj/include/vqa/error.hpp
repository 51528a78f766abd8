#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vqa {

// Malformed input bytes. The offset is where parsing gave up.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Two frames (or a frame and a sequence) disagree on dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Not enough data to fit a statistical model (samples, patches, training pairs).
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model files of the wrong kind/version or with inconsistent contents.
class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vqa
