#include "vqa/nr_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "vqa/dct.hpp"
#include "vqa/error.hpp"

namespace vqa {
namespace {

constexpr double kEnergyFloor = 1e-6;
constexpr double kNullCoefficient = 1.0;
constexpr int kMinHighFrequency = 4;
constexpr double kEigenFloor = 1e-10;

void append_scale_features(const Plane& image, double* out) {
  const MscnField f = mscn(image);
  const Plane& m = f.coefficients;
  const GgdFit g = detail::fit_ggd_lenient(m.data);
  out[0] = g.shape;
  out[1] = g.sigma * g.sigma;

  // neighbour offsets: horizontal, vertical, main diagonal, anti-diagonal
  constexpr int kShifts[4][2] = {{1, 0}, {0, 1}, {1, 1}, {-1, 1}};
  std::vector<double> prod;
  prod.reserve(m.data.size());
  for (int s = 0; s < 4; ++s) {
    const int dx = kShifts[s][0];
    const int dy = kShifts[s][1];
    prod.clear();
    for (int y = 0; y + dy < m.height; ++y) {
      for (int x = std::max(0, -dx); x < m.width && x + dx < m.width; ++x) {
        prod.push_back(m(x, y) * m(x + dx, y + dy));
      }
    }
    const AggdFit a = detail::fit_aggd_lenient(prod);
    double* o = out + 2 + 4 * s;
    o[0] = a.shape;
    o[1] = a.mean;
    o[2] = a.sigma_left * a.sigma_left;
    o[3] = a.sigma_right * a.sigma_right;
  }
}

}  // namespace

double blockiness(const Frame& frame, int block_size) {
  if (block_size < 2) throw std::invalid_argument("block size must be at least 2");
  if (frame.width() < 2 * block_size || frame.height() < 2 * block_size) {
    throw std::invalid_argument("frame too small for blockiness: need at least " + std::to_string(2 * block_size) +
                                " pixels per edge");
  }
  double edge_sum = 0.0, inner_sum = 0.0;
  std::size_t edge_n = 0, inner_n = 0;
  auto add = [&](int a, int b, bool boundary) {
    const double d = static_cast<double>(a - b);
    if (boundary) {
      edge_sum += d * d;
      ++edge_n;
    } else {
      inner_sum += d * d;
      ++inner_n;
    }
  };
  const int w = frame.width();
  const int h = frame.height();
  for (int y = 0; y < h; ++y) {
    auto r = frame.row(y);
    for (int x = 0; x + 1 < w; ++x) add(r[x], r[x + 1], (x + 1) % block_size == 0);
  }
  for (int y = 0; y + 1 < h; ++y) {
    auto r0 = frame.row(y);
    auto r1 = frame.row(y + 1);
    const bool boundary = (y + 1) % block_size == 0;
    for (int x = 0; x < w; ++x) add(r0[x], r1[x], boundary);
  }
  const double eb = std::max(edge_sum / static_cast<double>(edge_n), kEnergyFloor);
  const double ei = std::max(inner_sum / static_cast<double>(inner_n), kEnergyFloor);
  return 10.0 * std::log10(eb / ei);
}

double blur(const Frame& frame) {
  const int bw = frame.width() / 8;
  const int bh = frame.height() / 8;
  if (bw == 0 || bh == 0) throw std::invalid_argument("frame smaller than one 8x8 block");

  double null_weight = 0.0, total_weight = 0.0;
  Block8 block{};
  for (int by = 0; by < bh; ++by) {
    for (int bx = 0; bx < bw; ++bx) {
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) block[y * 8 + x] = frame.at(bx * 8 + x, by * 8 + y);
      const Block8 c = dct8x8(block);
      for (int v = 0; v < 8; ++v)
        for (int u = 0; u < 8; ++u) {
          if (u + v < kMinHighFrequency) continue;
          const double wgt = u + v;
          total_weight += wgt;
          if (std::abs(c[v * 8 + u]) < kNullCoefficient) null_weight += wgt;
        }
    }
  }
  return 10.0 * null_weight / total_weight;
}

Plane downsample2(const Plane& image) {
  Plane out(image.width / 2, image.height / 2);
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x)
      out(x, y) = 0.25 * (image(2 * x, 2 * y) + image(2 * x + 1, 2 * y) + image(2 * x, 2 * y + 1) +
                          image(2 * x + 1, 2 * y + 1));
  return out;
}

FeatureVector brisque_features(const Plane& image) {
  if (image.width < kMinFeatureEdge || image.height < kMinFeatureEdge) {
    throw std::invalid_argument("image too small for NSS features: need at least " +
                                std::to_string(kMinFeatureEdge) + " pixels per edge");
  }
  FeatureVector f{};
  append_scale_features(image, f.data());
  append_scale_features(downsample2(image), f.data() + kFeaturesPerScale);
  return f;
}

FeatureVector brisque_features(const Frame& frame) { return brisque_features(Plane(frame)); }

PatchFeatures patch_features(const Frame& frame, int patch) {
  if (patch < kMinFeatureEdge) throw std::invalid_argument("patch size below feature minimum");
  PatchFeatures out;
  const Plane full(frame);
  for (int py = 0; py + patch <= frame.height(); py += patch) {
    for (int px = 0; px + patch <= frame.width(); px += patch) {
      Plane p(patch, patch);
      for (int y = 0; y < patch; ++y)
        for (int x = 0; x < patch; ++x) p(x, y) = full(px + x, py + y);
      const MscnField m = mscn(p);
      double s = 0.0;
      for (double v : m.local_sigma.data) s += v;
      out.sharpness.push_back(s / static_cast<double>(m.local_sigma.data.size()));
      out.features.push_back(brisque_features(p));
    }
  }
  return out;
}

MvgModel fit_mvg(std::span<const FeatureVector> samples) {
  if (samples.empty()) throw InsufficientData("no feature vectors to fit");
  const int d = static_cast<int>(kFeatureDim);
  const auto n = static_cast<double>(samples.size());
  MvgModel m{Eigen::VectorXd::Zero(d), Eigen::MatrixXd::Zero(d, d)};
  for (const auto& s : samples) m.mean += Eigen::Map<const Eigen::VectorXd>(s.data(), d);
  m.mean /= n;
  if (samples.size() > 1) {
    for (const auto& s : samples) {
      const Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(s.data(), d) - m.mean;
      m.covariance.noalias() += c * c.transpose();
    }
    m.covariance /= (n - 1.0);
  }
  return m;
}

MvgModel niqe_fit(std::span<const Frame> pristine, const NiqeParams& params) {
  std::vector<FeatureVector> selected;
  for (const auto& img : pristine) {
    const PatchFeatures pf = patch_features(img, params.patch);
    if (pf.features.empty()) continue;
    const double top = *std::max_element(pf.sharpness.begin(), pf.sharpness.end());
    for (std::size_t i = 0; i < pf.features.size(); ++i) {
      if (pf.sharpness[i] >= params.sharpness_fraction * top) selected.push_back(pf.features[i]);
    }
  }
  const std::size_t need = 2 * kFeatureDim;
  if (selected.size() < need) {
    throw InsufficientData("insufficient patches: " + std::to_string(selected.size()) + " selected, need " +
                           std::to_string(need));
  }
  return fit_mvg(selected);
}

double mvg_distance(const MvgModel& a, const MvgModel& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("MVG models differ in dimension");
  const Eigen::VectorXd d = a.mean - b.mean;
  const Eigen::MatrixXd pooled = 0.5 * (a.covariance + b.covariance);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(pooled);
  const Eigen::VectorXd proj = es.eigenvectors().transpose() * d;
  double q = 0.0;
  for (int i = 0; i < proj.size(); ++i) {
    const double lambda = es.eigenvalues()[i];
    if (lambda > kEigenFloor) q += proj[i] * proj[i] / lambda;
  }
  return std::sqrt(q);
}

double niqe_score(const Frame& frame, const MvgModel& model, const NiqeParams& params) {
  const PatchFeatures pf = patch_features(frame, params.patch);
  if (pf.features.empty()) {
    throw InsufficientData("frame " + std::to_string(frame.width()) + "x" + std::to_string(frame.height()) +
                           " has no " + std::to_string(params.patch) + "px patch");
  }
  return mvg_distance(model, fit_mvg(pf.features));
}

double BrisqueRegressor::predict(const FeatureVector& f) const {
  double acc = weights.back();
  for (std::size_t i = 0; i < kFeatureDim; ++i) {
    const double lo = feature_min[i];
    const double hi = feature_max[i];
    const double v = std::clamp(f[i], lo, hi);
    acc += weights[i] * (2.0 * (v - lo) / (hi - lo) - 1.0);
  }
  return acc;
}

BrisqueRegressor train_ridge(std::span<const FeatureVector> features, std::span<const double> labels,
                             double lambda) {
  if (features.size() != labels.size()) throw std::invalid_argument("features and labels differ in length");
  const std::size_t d = kFeatureDim;
  if (features.size() < d + 1) {
    throw InsufficientData("regressor needs at least " + std::to_string(d + 1) + " training pairs, got " +
                           std::to_string(features.size()));
  }
  if (std::set<double>(labels.begin(), labels.end()).size() < 3) {
    throw InsufficientData("training labels need at least 3 distinct values");
  }
  if (!(lambda > 0.0)) throw std::invalid_argument("ridge lambda must be positive");

  BrisqueRegressor model;
  model.feature_min = features.front();
  model.feature_max = features.front();
  for (const auto& f : features) {
    for (std::size_t i = 0; i < d; ++i) {
      model.feature_min[i] = std::min(model.feature_min[i], f[i]);
      model.feature_max[i] = std::max(model.feature_max[i], f[i]);
    }
  }
  // A feature that never varies carries no information; give it a unit range so the
  // normalization stays defined (it maps to -1 everywhere in training).
  for (std::size_t i = 0; i < d; ++i) {
    if (!(model.feature_max[i] > model.feature_min[i])) model.feature_max[i] = model.feature_min[i] + 1.0;
  }

  const auto n = static_cast<Eigen::Index>(features.size());
  const auto cols = static_cast<Eigen::Index>(d + 1);
  Eigen::MatrixXd x(n, cols);
  Eigen::VectorXd y(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& f = features[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < d; ++i) {
      x(r, static_cast<Eigen::Index>(i)) =
          2.0 * (f[i] - model.feature_min[i]) / (model.feature_max[i] - model.feature_min[i]) - 1.0;
    }
    x(r, cols - 1) = 1.0;
    y[r] = labels[static_cast<std::size_t>(r)];
  }
  Eigen::MatrixXd gram = x.transpose() * x;
  for (Eigen::Index i = 0; i + 1 < cols; ++i) gram(i, i) += lambda;
  const Eigen::VectorXd w = gram.ldlt().solve(x.transpose() * y);
  model.weights.assign(w.data(), w.data() + w.size());
  return model;
}

BrisqueRegressor train_brisque(std::span<const LabeledFrame> corpus, double lambda) {
  std::vector<FeatureVector> feats;
  std::vector<double> labels;
  feats.reserve(corpus.size());
  for (const auto& item : corpus) {
    feats.push_back(brisque_features(item.frame));
    labels.push_back(item.label);
  }
  return train_ridge(feats, labels, lambda);
}

double brisque_score(const Frame& frame, const BrisqueRegressor& model) {
  return model.predict(brisque_features(frame));
}

}  // namespace vqa
