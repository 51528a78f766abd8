#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqa/frame.hpp"
#include "vqa/nss.hpp"

namespace vqa {

// ---------------------------------------------------------------------------
// Artifact metrics

/// Block-edge energy ratio in dB: mean squared step across block-boundary pixel
/// pairs over mean squared step across all other adjacent pairs, both orientations
/// pooled. Each energy is floored at 1e-6 so a flat frame scores 0 dB.
double blockiness(const Frame& frame, int block_size = 8);

/// DCT-domain blur score in [0, 10]: weighted fraction (weight u+v) of high-frequency
/// coefficients (u+v >= 4) with magnitude below 1 over all 8x8 blocks of the
/// top-left multiple-of-8 crop. 10 means no detectable high-frequency content.
double blur(const Frame& frame);

// ---------------------------------------------------------------------------
// Spatial NSS features

inline constexpr std::size_t kFeaturesPerScale = 18;
inline constexpr std::size_t kFeatureDim = 2 * kFeaturesPerScale;
/// Smallest edge that leaves >= 100 samples for every half-resolution fit.
inline constexpr int kMinFeatureEdge = 34;

/// Per scale (full, then 2x2 box-downsampled): GGD [shape, sigma^2] of the MSCN
/// field, then for horizontal, vertical, main- and anti-diagonal neighbour products
/// AGGD [shape, mean, sigma_left^2, sigma_right^2].
using FeatureVector = std::array<double, kFeatureDim>;

FeatureVector brisque_features(const Frame& frame);
FeatureVector brisque_features(const Plane& image);

/// 2x2 box average; odd trailing rows/columns are dropped.
Plane downsample2(const Plane& image);

// ---------------------------------------------------------------------------
// NIQE

struct MvgModel {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;

  int dim() const { return static_cast<int>(mean.size()); }
};

struct NiqeParams {
  int patch = 96;
  double sharpness_fraction = 0.75;
};

/// Features of every non-overlapping patch of `frame`, with their sharpness
/// (mean local MSCN sigma).
struct PatchFeatures {
  std::vector<FeatureVector> features;
  std::vector<double> sharpness;
};
PatchFeatures patch_features(const Frame& frame, int patch);

/// Sample mean / sample covariance (n-1). One sample yields a zero covariance.
MvgModel fit_mvg(std::span<const FeatureVector> samples);

/// Pristine model from the sharpest patches of each corpus image.
MvgModel niqe_fit(std::span<const Frame> pristine, const NiqeParams& params = {});

/// Distance between the model and an MVG fitted to all patches of `frame`.
double niqe_score(const Frame& frame, const MvgModel& model, const NiqeParams& params = {});

/// sqrt(d^T ((S1+S2)/2)^+ d) with eigenvalues <= 1e-10 treated as zero.
double mvg_distance(const MvgModel& a, const MvgModel& b);

// ---------------------------------------------------------------------------
// BRISQUE-style regressor

struct BrisqueRegressor {
  std::vector<double> weights;  ///< kFeatureDim feature weights followed by the bias
  FeatureVector feature_min{};
  FeatureVector feature_max{};

  /// Min-max normalize to [-1, 1] (clamped to the training range), then affine map.
  double predict(const FeatureVector& f) const;
};

struct LabeledFrame {
  Frame frame;
  double label;
};

inline constexpr double kRidgeLambda = 1e-3;

/// Ridge fit on raw feature vectors; bias column is not regularized.
BrisqueRegressor train_ridge(std::span<const FeatureVector> features, std::span<const double> labels,
                             double lambda = kRidgeLambda);

BrisqueRegressor train_brisque(std::span<const LabeledFrame> corpus, double lambda = kRidgeLambda);

/// Higher is better (the training labels are PSNR values).
double brisque_score(const Frame& frame, const BrisqueRegressor& model);

// ---------------------------------------------------------------------------
// Model files: "VQA-MODEL <kind> v1", dimension, then one number per line.

std::string serialize_model(const MvgModel& model);
std::string serialize_model(const BrisqueRegressor& model);
MvgModel parse_niqe_model(std::string_view text);
BrisqueRegressor parse_brisque_model(std::string_view text);

}  // namespace vqa
