#pragma once

// Brute-force reference computations used as test oracles. Deliberately naive.

#include <cmath>
#include <vector>

#include "vqa/frame.hpp"

namespace vqa::test {

inline std::vector<double> naive_gaussian(int size, double sigma) {
  std::vector<double> g(static_cast<std::size_t>(size));
  double sum = 0;
  for (int i = 0; i < size; ++i) {
    const double d = i - (size - 1) / 2.0;
    g[static_cast<std::size_t>(i)] = std::exp(-d * d / (2 * sigma * sigma));
    sum += g[static_cast<std::size_t>(i)];
  }
  for (auto& v : g) v /= sum;
  return g;
}

// Recomputes every window's weighted moments from scratch.
inline std::vector<double> naive_ssim_map(const Frame& a, const Frame& b, int win = 11, double sigma = 1.5) {
  const auto g = naive_gaussian(win, sigma);
  const double c1 = (0.01 * 255) * (0.01 * 255), c2 = (0.03 * 255) * (0.03 * 255);
  std::vector<double> out;
  for (int y0 = 0; y0 + win <= a.height(); ++y0)
    for (int x0 = 0; x0 + win <= a.width(); ++x0) {
      double mx = 0, my = 0;
      for (int j = 0; j < win; ++j)
        for (int i = 0; i < win; ++i) {
          const double w = g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
          mx += w * a.at(x0 + i, y0 + j);
          my += w * b.at(x0 + i, y0 + j);
        }
      double vx = 0, vy = 0, cxy = 0;
      for (int j = 0; j < win; ++j)
        for (int i = 0; i < win; ++i) {
          const double w = g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
          const double dx = a.at(x0 + i, y0 + j) - mx, dy = b.at(x0 + i, y0 + j) - my;
          vx += w * dx * dx;
          vy += w * dy * dy;
          cxy += w * dx * dy;
        }
      out.push_back((2 * mx * my + c1) * (2 * cxy + c2) / ((mx * mx + my * my + c1) * (vx + vy + c2)));
    }
  return out;
}

inline double naive_ssim(const Frame& a, const Frame& b) {
  const auto m = naive_ssim_map(a, b);
  double s = 0;
  for (double v : m) s += v;
  return s / static_cast<double>(m.size());
}

// Direct sum over an 8x8 block, no separability.
inline std::vector<double> naive_dct8(const std::vector<double>& block) {
  std::vector<double> out(64);
  const double pi = std::acos(-1.0);
  for (int v = 0; v < 8; ++v)
    for (int u = 0; u < 8; ++u) {
      const double cu = u == 0 ? std::sqrt(1.0 / 8) : std::sqrt(2.0 / 8);
      const double cv = v == 0 ? std::sqrt(1.0 / 8) : std::sqrt(2.0 / 8);
      double s = 0;
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
          s += block[static_cast<std::size_t>(y * 8 + x)] * std::cos((2 * x + 1) * u * pi / 16) *
               std::cos((2 * y + 1) * v * pi / 16);
      out[static_cast<std::size_t>(v * 8 + u)] = cu * cv * s;
    }
  return out;
}

}  // namespace vqa::test
