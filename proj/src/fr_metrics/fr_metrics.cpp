#include "vqa/fr_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "vqa/error.hpp"
#include "vqa/filter.hpp"

namespace vqa {
namespace {

void require_same_shape(const Frame& a, const Frame& b) {
  if (!a.same_shape(b)) {
    throw DimensionMismatch("frame sizes differ: " + std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                            " vs " + std::to_string(b.width()) + "x" + std::to_string(b.height()));
  }
}

}  // namespace

std::vector<double> SsimParams::kernel() const { return gaussian_kernel(window, sigma); }

double mse(const Frame& orig, const Frame& rcvd) {
  require_same_shape(orig, rcvd);
  auto a = orig.luma();
  auto b = rcvd.luma();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int d = int{a[i]} - int{b[i]};
    acc += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(acc) / static_cast<double>(a.size());
}

PsnrResult psnr_detail(const Frame& orig, const Frame& rcvd) {
  double e = mse(orig, rcvd);
  if (e == 0.0) return {kPsnrCapDb, true};
  return {10.0 * std::log10(255.0 * 255.0 / e), false};
}

double psnr(const Frame& orig, const Frame& rcvd) { return psnr_detail(orig, rcvd).db; }

Plane ssim_map(const Frame& orig, const Frame& rcvd, const SsimParams& params) {
  require_same_shape(orig, rcvd);
  if (orig.width() < params.window || orig.height() < params.window) {
    throw std::invalid_argument("frame smaller than the " + std::to_string(params.window) + "x" +
                                std::to_string(params.window) + " SSIM window");
  }
  const Plane x(orig);
  const Plane y(rcvd);
  Plane xx(x.width, x.height), yy(x.width, x.height), xy(x.width, x.height);
  for (std::size_t i = 0; i < x.data.size(); ++i) {
    xx.data[i] = x.data[i] * x.data[i];
    yy.data[i] = y.data[i] * y.data[i];
    xy.data[i] = x.data[i] * y.data[i];
  }
  const auto k = params.kernel();
  const Plane mx = filter_valid(x, k);
  const Plane my = filter_valid(y, k);
  const Plane exx = filter_valid(xx, k);
  const Plane eyy = filter_valid(yy, k);
  const Plane exy = filter_valid(xy, k);

  const double c1 = params.c1();
  const double c2 = params.c2();
  Plane out(mx.width, mx.height);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    const double ux = mx.data[i];
    const double uy = my.data[i];
    const double vx = std::max(0.0, exx.data[i] - ux * ux);
    const double vy = std::max(0.0, eyy.data[i] - uy * uy);
    const double cxy = exy.data[i] - ux * uy;
    out.data[i] = ((2 * ux * uy + c1) * (2 * cxy + c2)) / ((ux * ux + uy * uy + c1) * (vx + vy + c2));
  }
  return out;
}

double ssim(const Frame& orig, const Frame& rcvd, const SsimParams& params) {
  const Plane m = ssim_map(orig, rcvd, params);
  return std::accumulate(m.data.begin(), m.data.end(), 0.0) / static_cast<double>(m.data.size());
}

}  // namespace vqa
