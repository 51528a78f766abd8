#pragma once

#include <vector>

#include "vqa/frame.hpp"

namespace vqa {

/// PSNR reported when the two frames are identical (MSE = 0).
inline constexpr double kPsnrCapDb = 100.0;

/// Gaussian-windowed SSIM constants. Defaults are the canonical 11x11, sigma 1.5
/// window with K1 = 0.01, K2 = 0.03 on an 8-bit dynamic range.
struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double dynamic_range = 255.0;
  double k1 = 0.01;
  double k2 = 0.03;

  double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
  /// Normalized 1-D taps; the 2-D window is their outer product.
  std::vector<double> kernel() const;
};

/// Mean squared error normalized by pixel count.
double mse(const Frame& orig, const Frame& rcvd);

struct PsnrResult {
  double db;
  bool identical;
};

PsnrResult psnr_detail(const Frame& orig, const Frame& rcvd);
/// 10 log10(255^2 / MSE), capped at kPsnrCapDb for identical frames.
double psnr(const Frame& orig, const Frame& rcvd);

/// Local SSIM at every position where the full window fits (no padding).
Plane ssim_map(const Frame& orig, const Frame& rcvd, const SsimParams& params = {});
/// Mean of ssim_map.
double ssim(const Frame& orig, const Frame& rcvd, const SsimParams& params = {});

}  // namespace vqa
