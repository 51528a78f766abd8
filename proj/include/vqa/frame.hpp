#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vqa {

/// One 8-bit luma plane. Samples are row-major; storage type guarantees [0,255].
class Frame {
 public:
  Frame(int width, int height, std::vector<std::uint8_t> luma);

  static Frame filled(int width, int height, std::uint8_t value);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return luma_.size(); }

  std::uint8_t at(int x, int y) const { return luma_[static_cast<std::size_t>(y) * width_ + x]; }
  std::span<const std::uint8_t> luma() const noexcept { return luma_; }
  std::span<const std::uint8_t> row(int y) const {
    return std::span<const std::uint8_t>(luma_).subspan(static_cast<std::size_t>(y) * width_, width_);
  }

  bool same_shape(const Frame& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  /// Top-left anchored sub-rectangle copy.
  Frame crop(int x0, int y0, int w, int h) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> luma_;
};

/// Ordered frames sharing one size. frame_rate is informational.
class VideoSequence {
 public:
  explicit VideoSequence(std::vector<Frame> frames, double frame_rate = 30.0);

  const std::vector<Frame>& frames() const noexcept { return frames_; }
  std::size_t size() const noexcept { return frames_.size(); }
  const Frame& operator[](std::size_t i) const { return frames_[i]; }
  int width() const noexcept { return frames_.front().width(); }
  int height() const noexcept { return frames_.front().height(); }
  double frame_rate() const noexcept { return frame_rate_; }

  friend bool operator==(const VideoSequence&, const VideoSequence&) = default;

 private:
  std::vector<Frame> frames_;
  double frame_rate_;
};

/// Double-precision working image used by the metric arithmetic.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  Plane() = default;
  Plane(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}
  explicit Plane(const Frame& f);

  double& operator()(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double operator()(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Round and clamp a working plane back to 8-bit storage.
Frame to_frame(const Plane& p);

}  // namespace vqa
