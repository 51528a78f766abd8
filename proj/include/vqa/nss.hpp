#pragma once

#include <span>
#include <vector>

#include "vqa/frame.hpp"

namespace vqa {

/// Gamma function. Thin wrapper over the C library so callers share one definition.
double gamma_fn(double x);

/// Mean-subtracted contrast-normalized coefficients over the valid region.
struct MscnField {
  Plane coefficients;  ///< (I - mu) / (sigma + C)
  Plane local_sigma;   ///< Gaussian-weighted local standard deviation
};

struct MscnParams {
  int window = 7;
  double sigma = 7.0 / 6.0;
  double stabilizer = 1.0;  ///< on the [0,255] intensity scale
};

MscnField mscn(const Plane& image, const MscnParams& params = {});
MscnField mscn(const Frame& frame, const MscnParams& params = {});

/// Zero-mean generalized Gaussian fit.
struct GgdFit {
  double shape;  ///< beta, in [kShapeMin, kShapeMax]
  double sigma;  ///< standard deviation of the samples
};

/// Asymmetric generalized Gaussian fit.
struct AggdFit {
  double shape;  ///< alpha
  double mean;   ///< eta
  double sigma_left;
  double sigma_right;
};

inline constexpr double kShapeMin = 0.2;
inline constexpr double kShapeMax = 10.0;
inline constexpr double kShapeStep = 0.001;
inline constexpr std::size_t kMinFitSamples = 100;

/// Moment matching: beta solves G(1/b)G(3/b)/G(2/b)^2 = E[x^2]/E[|x|]^2, nearest point
/// on the 0.001 grid over [0.2, 10].
GgdFit fit_ggd(std::span<const double> samples);

/// Moment matching per the BRISQUE AGGD estimator, same shape grid.
AggdFit fit_aggd(std::span<const double> samples);

/// Generalized Gaussian ratio r(b) = G(1/b)G(3/b)/G(2/b)^2; decreasing in b.
double ggd_ratio(double shape);
/// AGGD ratio rho(a) = G(2/a)^2/(G(1/a)G(3/a)); increasing in a.
double aggd_ratio(double shape);

namespace detail {

/// Same estimators without the sample-count and degeneracy preconditions. Feature
/// extraction on flat regions uses these: all-zero input maps to the heavy-tail
/// grid limit (shape 0.2, zero spread) and a missing side of an AGGD has zero spread.
GgdFit fit_ggd_lenient(std::span<const double> samples);
AggdFit fit_aggd_lenient(std::span<const double> samples);

}  // namespace detail
}  // namespace vqa
