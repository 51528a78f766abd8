#include "vqa/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vqa {

std::vector<double> gaussian_kernel(int size, double sigma) {
  if (size <= 0 || sigma <= 0) throw std::invalid_argument("gaussian kernel needs size > 0 and sigma > 0");
  std::vector<double> k(size);
  const double centre = (size - 1) / 2.0;
  for (int i = 0; i < size; ++i) {
    double d = i - centre;
    k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  const double sum = std::accumulate(k.begin(), k.end(), 0.0);
  for (auto& v : k) v /= sum;
  return k;
}

Plane filter_valid(const Plane& in, const std::vector<double>& kernel) {
  const int k = static_cast<int>(kernel.size());
  const int ow = in.width - k + 1;
  const int oh = in.height - k + 1;
  if (ow <= 0 || oh <= 0) throw std::invalid_argument("plane smaller than filter window");

  Plane rows(ow, in.height);
  for (int y = 0; y < in.height; ++y) {
    const double* src = &in.data[static_cast<std::size_t>(y) * in.width];
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += kernel[t] * src[x + t];
      rows(x, y) = acc;
    }
  }
  Plane out(ow, oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += kernel[t] * rows(x, y + t);
      out(x, y) = acc;
    }
  }
  return out;
}

Plane filter_replicate(const Plane& in, const std::vector<double>& kernel) {
  const int k = static_cast<int>(kernel.size());
  const int r = k / 2;
  Plane rows(in.width, in.height);
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += kernel[t] * in(std::clamp(x + t - r, 0, in.width - 1), y);
      rows(x, y) = acc;
    }
  }
  Plane out(in.width, in.height);
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < in.width; ++x) {
      double acc = 0.0;
      for (int t = 0; t < k; ++t) acc += kernel[t] * rows(x, std::clamp(y + t - r, 0, in.height - 1));
      out(x, y) = acc;
    }
  }
  return out;
}

}  // namespace vqa
