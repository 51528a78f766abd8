#pragma once

#include <vector>

#include "vqa/frame.hpp"

namespace vqa {

/// Sampled 1-D Gaussian of `size` taps centred on the middle tap, normalized to sum 1.
std::vector<double> gaussian_kernel(int size, double sigma);

/// Separable correlation with a symmetric kernel, keeping only positions where the
/// full 2-D window fits. Output is (w - k + 1) x (h - k + 1).
Plane filter_valid(const Plane& in, const std::vector<double>& kernel);

/// Same separable filter with replicated borders; output keeps the input size.
Plane filter_replicate(const Plane& in, const std::vector<double>& kernel);

}  // namespace vqa
