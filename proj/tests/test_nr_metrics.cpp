#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "support.hpp"
#include "vqa/dct.hpp"
#include "vqa/distortion.hpp"
#include "vqa/error.hpp"
#include "vqa/nr_metrics.hpp"
#include "vqa/nss.hpp"
#include "vqa/synth.hpp"

using namespace vqa;

namespace {

Frame tiles(int w, int h, std::uint8_t a, std::uint8_t b) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) px[static_cast<std::size_t>(y) * w + x] = ((x / 8 + y / 8) % 2) ? b : a;
  return Frame(w, h, std::move(px));
}

// Replace each 8x8 block by its mean.
Frame block_means(const Frame& f) {
  std::vector<std::uint8_t> px(f.luma().begin(), f.luma().end());
  for (int by = 0; by + 8 <= f.height(); by += 8)
    for (int bx = 0; bx + 8 <= f.width(); bx += 8) {
      int sum = 0;
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) sum += f.at(bx + x, by + y);
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
          px[static_cast<std::size_t>(by + y) * f.width() + bx + x] = static_cast<std::uint8_t>((sum + 32) / 64);
    }
  return Frame(f.width(), f.height(), std::move(px));
}

std::vector<double> gaussian_draws(int n, std::uint64_t seed) {
  vqa::test::Gen g(seed);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = g.normal();
  return v;
}

std::vector<double> laplace_draws(int n, std::uint64_t seed) {
  vqa::test::Gen g(seed);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) {
    const double u = g.real_in(-0.5, 0.5);
    x = -std::copysign(std::log(1 - 2 * std::abs(u)), u);
  }
  return v;
}

// Rejection sampler for the AGGD with shape 1 and side deviations (sl, sr).
std::vector<double> aggd_draws(int n, double sl, double sr, std::uint64_t seed) {
  const double bl = sl / std::sqrt(2.0), br = sr / std::sqrt(2.0);  // scale = sigma * sqrt(G(1)/G(3))
  vqa::test::Gen g(seed);
  std::vector<double> v;
  while (static_cast<int>(v.size()) < n) {
    const double x = g.real_in(-25 * bl, 25 * br);
    const double p = x < 0 ? std::exp(x / bl) : std::exp(-x / br);
    if (g.real_in(0, 1) < p) v.push_back(x);
  }
  return v;
}

std::vector<Frame> scenes(int n, int w, int h, std::uint64_t seed0) {
  std::vector<Frame> out;
  for (int i = 0; i < n; ++i) out.push_back(synth::natural_scene(w, h, seed0 + static_cast<std::uint64_t>(i)));
  return out;
}

double pearson_naive(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n, my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

TEST_CASE("gamma helper") {
  CHECK(std::abs(gamma_fn(0.5) / std::sqrt(std::numbers::pi) - 1) < 1e-10);
  CHECK(std::abs(gamma_fn(1.0) - 1) < 1e-10);
  CHECK(std::abs(gamma_fn(5.0) / 24 - 1) < 1e-10);
  CHECK(ggd_ratio(2.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK(ggd_ratio(1.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("dct: matches direct summation and inverts") {
  vqa::test::for_all(20, 3, [](vqa::test::Gen& g) {
    Block8 b{};
    std::vector<double> v(64);
    for (int i = 0; i < 64; ++i) v[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] = g.real_in(-128, 127);
    const Block8 c = dct8x8(b);
    const auto ref = vqa::test::naive_dct8(v);
    for (int i = 0; i < 64; ++i) CHECK(c[static_cast<std::size_t>(i)] == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-12).scale(128));
    const Block8 back = idct8x8(c);
    for (int i = 0; i < 64; ++i) CHECK(std::abs(back[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) < 1e-9);
  });
}

TEST_CASE("blockiness: worked cases") {
  CHECK(blockiness(Frame::filled(64, 64, 90)) == 0.0);
  // Every boundary step is 50, every interior step is 0 (floored to 1e-6).
  CHECK(blockiness(tiles(64, 64, 100, 150)) == doctest::Approx(10 * std::log10(2500 / 1e-6)).epsilon(1e-12));
  std::vector<std::uint8_t> ramp(64 * 64);
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 64; ++x) ramp[static_cast<std::size_t>(y * 64 + x)] = static_cast<std::uint8_t>(x % 256);
  CHECK(std::abs(blockiness(Frame(64, 64, ramp))) < 1e-12);
  CHECK_THROWS_AS(blockiness(Frame::filled(15, 64, 0)), std::invalid_argument);
  CHECK_NOTHROW(blockiness(Frame::filled(16, 16, 0)));
}

TEST_CASE("blockiness: block-mean quantization raises it") {
  for (std::uint64_t s : {1, 2, 3}) {
    Frame f = synth::natural_scene(128, 96, s);
    CHECK(blockiness(block_means(f)) > blockiness(f));
  }
}

TEST_CASE("blockiness: non-increasing in JPEG quality") {
  for (std::uint64_t s : {11, 12, 13}) {
    Frame f = synth::natural_scene(160, 120, s);
    double last = INFINITY;
    for (int q : {10, 30, 50, 70, 90}) {
      const double b = blockiness(jpeg_emulate(f, JpegQuality(q)));
      CHECK(b <= last);
      last = b;
    }
  }
}

TEST_CASE("blur: worked cases") {
  CHECK(blur(Frame::filled(32, 24, 200)) == 10.0);
  Frame f = synth::natural_scene(128, 128, 7);
  CHECK(blur(gaussian_blur(f, 2.0)) > blur(f));
  vqa::test::Gen g(99);
  CHECK(blur(g.frame(128, 128)) < 2.0);
  CHECK_THROWS_AS(blur(Frame::filled(7, 30, 0)), std::invalid_argument);
  vqa::test::for_all(30, 4, [](vqa::test::Gen& gen) {
    const double b = blur(gen.int_in(0, 1) ? gen.any_frame(8, 40) : gen.ramp_noise(gen.int_in(8, 40), gen.int_in(8, 40), 3));
    CHECK(b >= 0.0);
    CHECK(b <= 10.0);
  });
}

TEST_CASE("mscn: constant, noise, and shape") {
  MscnField flat = mscn(Frame::filled(20, 15, 128));
  CHECK(flat.coefficients.width == 14);
  CHECK(flat.coefficients.height == 9);
  for (double v : flat.coefficients.data) CHECK(v == 0.0);

  Rng rng(5);
  Frame noise = awgn(Frame::filled(128, 128, 128), 20, rng);
  const auto& c = mscn(noise).coefficients.data;
  const double n = static_cast<double>(c.size());
  const double mean = std::accumulate(c.begin(), c.end(), 0.0) / n;
  double var = 0;
  for (double v : c) var += (v - mean) * (v - mean);
  var /= n;
  CHECK(var > 0.5);
  CHECK(var < 1.5);
  CHECK_THROWS_AS(mscn(Frame::filled(6, 10, 0)), std::invalid_argument);
}

TEST_CASE("mscn: sanity band on natural scenes") {
  for (std::uint64_t s : {21, 22, 23}) {
    const auto& c = mscn(synth::natural_scene(160, 120, s)).coefficients.data;
    const double n = static_cast<double>(c.size());
    const double mean = std::accumulate(c.begin(), c.end(), 0.0) / n;
    double var = 0;
    for (double v : c) var += (v - mean) * (v - mean);
    var /= n;
    CHECK(std::abs(mean) < 0.5);
    CHECK(var > 0.1);
    CHECK(var < 4.0);
  }
}

TEST_CASE("fit_ggd: recovers Gaussian and Laplacian shapes") {
  const GgdFit gauss = fit_ggd(gaussian_draws(100000, 1));
  CHECK(gauss.shape >= 1.9);
  CHECK(gauss.shape <= 2.1);
  CHECK(gauss.sigma == doctest::Approx(1.0).epsilon(0.02));
  const GgdFit lap = fit_ggd(laplace_draws(100000, 2));
  CHECK(lap.shape >= 0.95);
  CHECK(lap.shape <= 1.05);
}

TEST_CASE("fit_ggd: estimate brackets the sample moment ratio") {
  // Fraction z of zeros and unit magnitudes otherwise gives E[x^2]/E[|x|]^2 = 1/(1-z).
  for (double rho : {1.2, std::numbers::pi / 2, 2.0, 3.0}) {
    const int n = 60000;
    const int nonzero = static_cast<int>(std::lround(n / rho));
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < nonzero; ++i) x[static_cast<std::size_t>(i)] = (i % 2) ? 1.0 : -1.0;
    const double sample_rho = static_cast<double>(n) / nonzero;
    const double b = fit_ggd(x).shape;
    const double hi = ggd_ratio(std::max(kShapeMin, b - kShapeStep));
    const double lo = ggd_ratio(std::min(kShapeMax, b + kShapeStep));
    CHECK(sample_rho <= hi);
    if (b < kShapeMax) CHECK(sample_rho >= lo);  // ratios below 4/3 saturate at the grid edge
  }
}

TEST_CASE("fit_ggd: preconditions") {
  CHECK_THROWS_AS(fit_ggd(std::vector<double>(99, 1.0)), InsufficientData);
  CHECK_THROWS_AS(fit_ggd(std::vector<double>(500, 0.0)), InsufficientData);
  const GgdFit grid_edge = fit_ggd(std::vector<double>(500, 3.0));  // ratio 1: lightest tail on the grid
  CHECK(grid_edge.shape == kShapeMax);
}

TEST_CASE("fit_aggd: symmetric Gaussian") {
  const AggdFit a = fit_aggd(gaussian_draws(100000, 3));
  CHECK(a.shape == doctest::Approx(2.0).epsilon(0.05));
  CHECK(std::abs(a.mean) < 0.02);
}

TEST_CASE("fit_aggd: recovers the side ratio of an asymmetric sample") {
  const AggdFit a = fit_aggd(aggd_draws(100000, 1.0, 2.0, 4));
  const double ratio = a.sigma_left / a.sigma_right;
  CHECK(ratio >= 0.45);
  CHECK(ratio <= 0.55);
  CHECK(a.sigma_left == doctest::Approx(1.0).epsilon(0.1));
  CHECK(a.sigma_right == doctest::Approx(2.0).epsilon(0.1));
  CHECK(a.shape == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("fit_aggd: sign flip swaps sides and negates the mean") {
  vqa::test::for_all(10, 12, [](vqa::test::Gen& g) {
    auto x = aggd_draws(2000, g.real_in(0.5, 2), g.real_in(0.5, 2), g.engine()());
    std::vector<double> neg(x.size());
    std::transform(x.begin(), x.end(), neg.begin(), [](double v) { return -v; });
    const AggdFit a = fit_aggd(x), b = fit_aggd(neg);
    CHECK(a.shape == b.shape);
    CHECK(a.sigma_left == doctest::Approx(b.sigma_right).epsilon(1e-12));
    CHECK(a.sigma_right == doctest::Approx(b.sigma_left).epsilon(1e-12));
    CHECK(a.mean == doctest::Approx(-b.mean).epsilon(1e-12));
  });
}

TEST_CASE("fit_aggd: preconditions") {
  CHECK_THROWS_AS(fit_aggd(std::vector<double>(200, 1.0)), InsufficientData);
  CHECK_THROWS_AS(fit_aggd(std::vector<double>(50, -1.0)), InsufficientData);
  std::vector<double> few(99);
  for (std::size_t i = 0; i < few.size(); ++i) few[i] = (i % 2) ? 1.0 : -1.0;
  CHECK_THROWS_AS(fit_aggd(few), InsufficientData);
}

TEST_CASE("brisque features: layout and ranges on natural scenes") {
  for (std::uint64_t s : {31, 32, 33, 34}) {
    const Frame f = synth::natural_scene(192, 144, s);
    const FeatureVector v = brisque_features(f);
    for (double x : v) CHECK(std::isfinite(x));
    for (std::size_t scale = 0; scale < 2; ++scale) {
      const std::size_t o = scale * kFeaturesPerScale;
      CHECK(v[o] >= kShapeMin);
      CHECK(v[o] <= kShapeMax);
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(v[o + 2 + 4 * k] >= kShapeMin);
        CHECK(v[o + 2 + 4 * k] <= kShapeMax);
      }
    }
    CHECK(v[0] >= 1.5);
    CHECK(v[0] <= 2.8);

    const FeatureVector q10 = brisque_features(jpeg_emulate(f, JpegQuality(10)));
    double dist = 0;
    for (std::size_t i = 0; i < kFeatureDim; ++i) dist += (v[i] - q10[i]) * (v[i] - q10[i]);
    CHECK(dist > 0);
  }
}

TEST_CASE("brisque features: invariant to a constant offset") {
  const Frame f = synth::natural_scene(128, 96, 40);
  std::vector<std::uint8_t> px(f.luma().begin(), f.luma().end());
  for (auto& p : px) p = static_cast<std::uint8_t>(p + 10);  // scenes stay within [10, 245]
  const FeatureVector a = brisque_features(f), b = brisque_features(Frame(f.width(), f.height(), px));
  for (std::size_t i = 0; i < kFeatureDim; ++i) CHECK(std::abs(a[i] - b[i]) <= 0.05);
}

TEST_CASE("brisque features: minimum size and flat input") {
  CHECK_THROWS_AS(brisque_features(Frame::filled(kMinFeatureEdge - 1, 64, 0)), std::invalid_argument);
  const FeatureVector flat = brisque_features(Frame::filled(kMinFeatureEdge, kMinFeatureEdge, 50));
  for (double x : flat) CHECK(std::isfinite(x));
}

TEST_CASE("mvg fit: symmetric and positive semi-definite") {
  std::vector<FeatureVector> feats;
  for (const Frame& f : scenes(12, 320, 240, 300)) {
    auto pf = patch_features(f, 40);
    feats.insert(feats.end(), pf.features.begin(), pf.features.end());
  }
  REQUIRE(feats.size() >= 500);
  const MvgModel m = fit_mvg(feats);
  CHECK(m.dim() == 36);
  CHECK((m.covariance - m.covariance.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.covariance);
  CHECK(es.eigenvalues().minCoeff() >= -1e-8);
}

TEST_CASE("niqe: degenerate corpus of one repeated patch") {
  const Frame f = synth::natural_scene(96, 96, 50);
  const std::vector<Frame> corpus(72, f);
  const MvgModel m = niqe_fit(corpus);
  CHECK(m.dim() == 36);
  CHECK(m.covariance.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(niqe_score(f, m) < 1e-9);
}

TEST_CASE("niqe: too few patches") {
  const std::vector<Frame> tiny{synth::natural_scene(100, 100, 1)};
  CHECK_THROWS_WITH_AS(niqe_fit(tiny), doctest::Contains("insufficient patches"), InsufficientData);
  const MvgModel m{Eigen::VectorXd::Zero(36), Eigen::MatrixXd::Identity(36, 36)};
  CHECK_THROWS_AS(niqe_score(Frame::filled(95, 200, 0), m), InsufficientData);
}

TEST_CASE("niqe: pristine frames score low, compressed frames score higher") {
  const auto corpus = scenes(28, 320, 240, 600);
  std::vector<double> loo;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::vector<Frame> rest;
    for (std::size_t j = 0; j < corpus.size(); ++j)
      if (j != i) rest.push_back(corpus[j]);
    loo.push_back(niqe_score(corpus[i], niqe_fit(rest)));
  }
  const double n = static_cast<double>(loo.size());
  const double mean = std::accumulate(loo.begin(), loo.end(), 0.0) / n;
  double var = 0;
  for (double v : loo) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (n - 1));

  const MvgModel m = niqe_fit(corpus);
  for (std::size_t i = 0; i < 5; ++i) {
    const double s = niqe_score(corpus[i], m);
    CHECK(s >= 0);
    CHECK(s < mean + 2 * sd);
    CHECK(niqe_score(corpus[i], m) == s);
    CHECK(niqe_score(jpeg_emulate(corpus[i], JpegQuality(10)), m) > s);
  }
}

TEST_CASE("ridge: exact linear labels are interpolated") {
  vqa::test::Gen g(17);
  std::vector<double> w(36);
  for (auto& x : w) x = g.real_in(-0.5, 0.5);
  const int n = 60000;
  std::vector<FeatureVector> feats(static_cast<std::size_t>(n));
  std::vector<double> labels;
  for (auto& f : feats) {
    double y = 3.0;
    for (std::size_t i = 0; i < 36; ++i) {
      f[i] = g.real_in(-2, 5);
      y += w[i] * f[i];
    }
    labels.push_back(y);
  }
  auto worst_error = [&](double lambda) {
    const BrisqueRegressor r = train_ridge(feats, labels, lambda);
    double worst = 0;
    for (std::size_t k = 0; k < feats.size(); ++k) worst = std::max(worst, std::abs(r.predict(feats[k]) - labels[k]));
    return worst;
  };
  CHECK(worst_error(1e-9) < 1e-8);
  CHECK(worst_error(kRidgeLambda) < 1e-6);
}

TEST_CASE("ridge: large lambda shrinks feature weights") {
  vqa::test::Gen g(18);
  std::vector<FeatureVector> feats(200);
  std::vector<double> labels;
  for (auto& f : feats) {
    for (auto& x : f) x = g.real_in(0, 1);
    labels.push_back(10 * f[0] + 5 * f[3] + g.normal());
  }
  const BrisqueRegressor loose = train_ridge(feats, labels, 1e-3);
  const BrisqueRegressor tight = train_ridge(feats, labels, 1e12);
  double big = 0, small = 0;
  for (std::size_t i = 0; i < 36; ++i) big = std::max(big, std::abs(loose.weights[i]));
  for (std::size_t i = 0; i < 36; ++i) small = std::max(small, std::abs(tight.weights[i]));
  CHECK(big > 1);
  CHECK(small < 1e-6);
  // the unregularized bias settles on the mean label
  CHECK(tight.weights.back() == doctest::Approx(std::accumulate(labels.begin(), labels.end(), 0.0) / 200).epsilon(1e-6));
}

TEST_CASE("ridge: preconditions") {
  std::vector<FeatureVector> feats(36);
  std::vector<double> labels(36, 1.0);
  for (std::size_t i = 0; i < 36; ++i) feats[i].fill(static_cast<double>(i)), labels[i] = static_cast<double>(i % 3);
  CHECK_THROWS_AS(train_ridge(feats, labels), InsufficientData);
  feats.push_back(feats[0]);
  labels.push_back(0);
  CHECK_NOTHROW(train_ridge(feats, labels));
  std::vector<double> two(37);
  for (std::size_t i = 0; i < 37; ++i) two[i] = static_cast<double>(i % 2);
  CHECK_THROWS_AS(train_ridge(feats, two), InsufficientData);
}

TEST_CASE("brisque: trained on JPEG-labelled scenes") {
  const auto pristine = scenes(8, 192, 144, 900);
  std::vector<LabeledFrame> corpus;
  for (const Frame& f : pristine)
    for (int q = 10; q <= 90; q += 10) {
      Frame c = jpeg_emulate(f, JpegQuality(q));
      const double label = 10 * std::log10(65025.0 / std::max(1e-12, [&] {
        double s = 0;
        for (std::size_t i = 0; i < f.size(); ++i) s += (f.luma()[i] - c.luma()[i]) * (f.luma()[i] - c.luma()[i]);
        return s / static_cast<double>(f.size());
      }()));
      corpus.push_back({std::move(c), label});
    }
  const BrisqueRegressor model = train_brisque(corpus);
  CHECK(model.weights.size() == 37);

  for (const Frame& f : pristine) {
    const double s = brisque_score(f, model);
    CHECK(s == brisque_score(f, model));
    CHECK(s > brisque_score(jpeg_emulate(f, JpegQuality(10)), model));
    std::vector<double> qs, scores;
    for (int q = 10; q <= 90; q += 10) {
      qs.push_back(q);
      scores.push_back(brisque_score(jpeg_emulate(f, JpegQuality(q)), model));
    }
    CHECK(pearson_naive(qs, scores) >= 0.8);
  }

  // held-out image: the middle quality lands between the extremes
  const Frame held = synth::natural_scene(192, 144, 999);
  const double lo = brisque_score(jpeg_emulate(held, JpegQuality(10)), model);
  const double mid = brisque_score(jpeg_emulate(held, JpegQuality(50)), model);
  const double hi = brisque_score(jpeg_emulate(held, JpegQuality(90)), model);
  CHECK(mid > lo);
  CHECK(mid < hi);
}

TEST_CASE("model files: round trip is exact") {
  vqa::test::Gen g(5);
  MvgModel m{Eigen::VectorXd(36), Eigen::MatrixXd(36, 36)};
  Eigen::MatrixXd a(36, 36);
  for (int i = 0; i < 36; ++i) {
    m.mean[i] = g.normal() * 1e3;
    for (int j = 0; j < 36; ++j) a(i, j) = g.normal() / 7;
  }
  m.covariance = a * a.transpose();
  m.covariance = (m.covariance + m.covariance.transpose()) / 2;
  const std::string text = serialize_model(m);
  CHECK(text.rfind("VQA-MODEL niqe v1\n36\n", 0) == 0);
  const MvgModel back = parse_niqe_model(text);
  CHECK(back.mean == m.mean);
  CHECK(back.covariance == m.covariance);
  CHECK(serialize_model(back) == text);

  BrisqueRegressor r;
  r.weights.resize(37);
  for (auto& w : r.weights) w = g.normal();
  for (std::size_t i = 0; i < 36; ++i) r.feature_min[i] = g.real_in(-1, 0), r.feature_max[i] = g.real_in(0.1, 1);
  const std::string rt = serialize_model(r);
  CHECK(rt.rfind("VQA-MODEL brisque v1\n36\n", 0) == 0);
  const BrisqueRegressor rb = parse_brisque_model(rt);
  CHECK(rb.weights == r.weights);
  CHECK(rb.feature_min == r.feature_min);
  CHECK(rb.feature_max == r.feature_max);
}

TEST_CASE("model files: rejected inputs") {
  MvgModel m{Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(2, 2)};
  const std::string good = serialize_model(m);
  CHECK_NOTHROW(parse_niqe_model(good));
  CHECK_THROWS_AS(parse_brisque_model(good), ModelFormatError);
  CHECK_THROWS_AS(parse_niqe_model("VQA-MODEL niqe v2\n2\n0\n0\n1\n0\n0\n1\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_niqe_model(good + "5\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_niqe_model("VQA-MODEL niqe v1\n2\n0\n0\n1\n0\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_niqe_model("VQA-MODEL niqe v1\n2\n0\nzero\n1\n0\n0\n1\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_niqe_model("VQA-MODEL niqe v1\n2\n0\n0\n1\n0.5\n0\n1\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_niqe_model("VQA-MODEL niqe v1\n2\n0\n0\n-1\n0\n0\n1\n"), ModelFormatError);
  CHECK_THROWS_AS(parse_niqe_model(""), ModelFormatError);
}
