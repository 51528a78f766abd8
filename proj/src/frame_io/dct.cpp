#include "vqa/dct.hpp"

#include <cmath>
#include <numbers>

namespace vqa {
namespace {

// basis[k][n] = c(k) cos((2n+1) k pi / 16)
const std::array<std::array<double, 8>, 8>& basis() {
  static const auto table = [] {
    std::array<std::array<double, 8>, 8> b{};
    for (int k = 0; k < 8; ++k) {
      const double c = k == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      for (int n = 0; n < 8; ++n) b[k][n] = c * std::cos((2 * n + 1) * k * std::numbers::pi / 16.0);
    }
    return b;
  }();
  return table;
}

}  // namespace

Block8 dct8x8(const Block8& in) {
  const auto& b = basis();
  Block8 tmp{};
  // rows: horizontal transform
  for (int y = 0; y < 8; ++y)
    for (int u = 0; u < 8; ++u) {
      double acc = 0.0;
      for (int x = 0; x < 8; ++x) acc += b[u][x] * in[y * 8 + x];
      tmp[y * 8 + u] = acc;
    }
  Block8 out{};
  for (int v = 0; v < 8; ++v)
    for (int u = 0; u < 8; ++u) {
      double acc = 0.0;
      for (int y = 0; y < 8; ++y) acc += b[v][y] * tmp[y * 8 + u];
      out[v * 8 + u] = acc;
    }
  return out;
}

Block8 idct8x8(const Block8& in) {
  const auto& b = basis();
  Block8 tmp{};
  for (int v = 0; v < 8; ++v)
    for (int x = 0; x < 8; ++x) {
      double acc = 0.0;
      for (int u = 0; u < 8; ++u) acc += b[u][x] * in[v * 8 + u];
      tmp[v * 8 + x] = acc;
    }
  Block8 out{};
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) {
      double acc = 0.0;
      for (int v = 0; v < 8; ++v) acc += b[v][y] * tmp[v * 8 + x];
      out[y * 8 + x] = acc;
    }
  return out;
}

}  // namespace vqa
