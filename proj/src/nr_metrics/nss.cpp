#include "vqa/nss.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqa/error.hpp"
#include "vqa/filter.hpp"

namespace vqa {
namespace {

constexpr std::size_t kGridPoints = 9801;  // (10 - 0.2) / 0.001 + 1

double grid_shape(std::size_t k) { return kShapeMin + static_cast<double>(k) * kShapeStep; }

double log_ggd_ratio(double b) {
  return std::lgamma(1.0 / b) + std::lgamma(3.0 / b) - 2.0 * std::lgamma(2.0 / b);
}

// Tables are built once; static local init is thread-safe.
const std::vector<double>& ggd_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kGridPoints);
    for (std::size_t k = 0; k < kGridPoints; ++k) t[k] = std::exp(log_ggd_ratio(grid_shape(k)));
    return t;
  }();
  return table;
}

const std::vector<double>& aggd_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kGridPoints);
    for (std::size_t k = 0; k < kGridPoints; ++k) t[k] = std::exp(-log_ggd_ratio(grid_shape(k)));
    return t;
  }();
  return table;
}

// Nearest grid point to `target` on a monotone table.
template <class Compare>
std::size_t nearest_on_grid(const std::vector<double>& t, double target, Compare before) {
  auto it = std::lower_bound(t.begin(), t.end(), target, before);
  if (it == t.begin()) return 0;
  if (it == t.end()) return t.size() - 1;
  auto hi = static_cast<std::size_t>(it - t.begin());
  auto lo = hi - 1;
  return std::abs(t[lo] - target) <= std::abs(t[hi] - target) ? lo : hi;
}

double solve_ggd_shape(double rho) {
  // table is decreasing in shape
  return grid_shape(nearest_on_grid(ggd_table(), rho, [](double a, double b) { return a > b; }));
}

double solve_aggd_shape(double rho) {
  return grid_shape(nearest_on_grid(aggd_table(), rho, [](double a, double b) { return a < b; }));
}

}  // namespace

double gamma_fn(double x) { return std::tgamma(x); }

double ggd_ratio(double shape) { return std::exp(log_ggd_ratio(shape)); }
double aggd_ratio(double shape) { return std::exp(-log_ggd_ratio(shape)); }

MscnField mscn(const Plane& image, const MscnParams& params) {
  if (image.width < params.window || image.height < params.window) {
    throw std::invalid_argument("image smaller than the " + std::to_string(params.window) + "x" +
                                std::to_string(params.window) + " MSCN window");
  }
  const auto k = gaussian_kernel(params.window, params.sigma);
  Plane sq(image.width, image.height);
  for (std::size_t i = 0; i < sq.data.size(); ++i) sq.data[i] = image.data[i] * image.data[i];
  const Plane mu = filter_valid(image, k);
  const Plane e2 = filter_valid(sq, k);

  const int r = params.window / 2;
  MscnField f{Plane(mu.width, mu.height), Plane(mu.width, mu.height)};
  for (int y = 0; y < mu.height; ++y) {
    for (int x = 0; x < mu.width; ++x) {
      const double m = mu(x, y);
      const double s = std::sqrt(std::max(0.0, e2(x, y) - m * m));
      f.local_sigma(x, y) = s;
      f.coefficients(x, y) = (image(x + r, y + r) - m) / (s + params.stabilizer);
    }
  }
  return f;
}

MscnField mscn(const Frame& frame, const MscnParams& params) { return mscn(Plane(frame), params); }

namespace detail {

GgdFit fit_ggd_lenient(std::span<const double> samples) {
  double sq = 0.0, ab = 0.0;
  for (double v : samples) {
    sq += v * v;
    ab += std::abs(v);
  }
  const double n = static_cast<double>(samples.size());
  if (ab == 0.0) return {kShapeMin, 0.0};
  const double var = sq / n;
  const double m = ab / n;
  return {solve_ggd_shape(var / (m * m)), std::sqrt(var)};
}

AggdFit fit_aggd_lenient(std::span<const double> samples) {
  double neg_sq = 0.0, pos_sq = 0.0, ab = 0.0;
  std::size_t neg = 0, pos = 0;
  for (double v : samples) {
    if (v < 0) {
      neg_sq += v * v;
      ++neg;
    } else if (v > 0) {
      pos_sq += v * v;
      ++pos;
    }
    ab += std::abs(v);
  }
  if (ab == 0.0) return {kShapeMin, 0.0, 0.0, 0.0};
  const double n = static_cast<double>(samples.size());
  const double sl = neg ? std::sqrt(neg_sq / static_cast<double>(neg)) : 0.0;
  const double sr = pos ? std::sqrt(pos_sq / static_cast<double>(pos)) : 0.0;
  const double r_hat = (ab / n) * (ab / n) / ((neg_sq + pos_sq) / n);
  double big_r = r_hat;
  if (sr > 0.0) {
    const double g = sl / sr;
    big_r = r_hat * (g * g * g + 1.0) * (g + 1.0) / ((g * g + 1.0) * (g * g + 1.0));
  }
  const double alpha = solve_aggd_shape(big_r);
  const double eta = (sr - sl) * std::exp(std::lgamma(2.0 / alpha) - std::lgamma(1.0 / alpha));
  return {alpha, eta, sl, sr};
}

}  // namespace detail

GgdFit fit_ggd(std::span<const double> samples) {
  if (samples.size() < kMinFitSamples) {
    throw InsufficientData("GGD fit needs at least " + std::to_string(kMinFitSamples) + " samples, got " +
                           std::to_string(samples.size()));
  }
  if (std::all_of(samples.begin(), samples.end(), [](double v) { return v == 0.0; })) {
    throw InsufficientData("GGD fit on all-zero samples");
  }
  return detail::fit_ggd_lenient(samples);
}

AggdFit fit_aggd(std::span<const double> samples) {
  if (samples.size() < kMinFitSamples) {
    throw InsufficientData("AGGD fit needs at least " + std::to_string(kMinFitSamples) + " samples, got " +
                           std::to_string(samples.size()));
  }
  bool has_neg = std::any_of(samples.begin(), samples.end(), [](double v) { return v < 0.0; });
  bool has_pos = std::any_of(samples.begin(), samples.end(), [](double v) { return v > 0.0; });
  if (!has_neg || !has_pos) throw InsufficientData("AGGD fit needs both positive and negative samples");
  return detail::fit_aggd_lenient(samples);
}

}  // namespace vqa
