#include "vqa/frame.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqa/error.hpp"

namespace vqa {

Frame::Frame(int width, int height, std::vector<std::uint8_t> luma)
    : width_(width), height_(height), luma_(std::move(luma)) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("frame dimensions must be positive, got " + std::to_string(width) +
                                "x" + std::to_string(height));
  }
  if (luma_.size() != static_cast<std::size_t>(width) * height) {
    throw DimensionMismatch("luma length " + std::to_string(luma_.size()) + " != " +
                            std::to_string(width) + "x" + std::to_string(height));
  }
}

Frame Frame::filled(int width, int height, std::uint8_t value) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("frame dimensions must be positive");
  return Frame(width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, value));
}

Frame Frame::crop(int x0, int y0, int w, int h) const {
  if (x0 < 0 || y0 < 0 || w <= 0 || h <= 0 || x0 + w > width_ || y0 + h > height_) {
    throw std::out_of_range("crop rectangle outside frame");
  }
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(w) * h);
  for (int y = y0; y < y0 + h; ++y) {
    auto r = row(y).subspan(x0, w);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Frame(w, h, std::move(out));
}

VideoSequence::VideoSequence(std::vector<Frame> frames, double frame_rate)
    : frames_(std::move(frames)), frame_rate_(frame_rate) {
  if (frames_.empty()) throw std::invalid_argument("video sequence needs at least one frame");
  for (const auto& f : frames_) {
    if (!f.same_shape(frames_.front())) {
      throw DimensionMismatch("all frames in a sequence must share dimensions");
    }
  }
}

Plane::Plane(const Frame& f) : width(f.width()), height(f.height()), data(f.luma().begin(), f.luma().end()) {}

Frame to_frame(const Plane& p) {
  std::vector<std::uint8_t> out(p.data.size());
  std::transform(p.data.begin(), p.data.end(), out.begin(), [](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
  });
  return Frame(p.width, p.height, std::move(out));
}

}  // namespace vqa
