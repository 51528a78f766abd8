#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vqa/frame.hpp"

namespace vqa::test {

// Small hand-rolled generator for property tests; independent of the library Rng.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  double real_in(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  double normal() { return std::normal_distribution<double>()(eng_); }
  std::uint8_t byte() { return static_cast<std::uint8_t>(int_in(0, 255)); }

  Frame frame(int w, int h) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
    for (auto& p : px) p = byte();
    return Frame(w, h, std::move(px));
  }
  Frame any_frame(int min_edge, int max_edge) { return frame(int_in(min_edge, max_edge), int_in(min_edge, max_edge)); }

  // Smooth gradient plus noise: a structured image that is not a synth scene.
  Frame ramp_noise(int w, int h, double noise) {
    std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
    const double gx = real_in(-1.5, 1.5), gy = real_in(-1.5, 1.5), base = real_in(60, 190);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double v = base + gx * (x - w / 2.0) + gy * (y - h / 2.0) + noise * normal();
        px[static_cast<std::size_t>(y) * w + x] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
      }
    return Frame(w, h, std::move(px));
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

template <class Fn>
void for_all(int cases, std::uint64_t seed, Fn&& fn) {
  Gen g(seed);
  for (int i = 0; i < cases; ++i) fn(g);
}

inline std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace vqa::test
