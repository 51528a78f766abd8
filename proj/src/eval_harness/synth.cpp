#include "vqa/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "vqa/filter.hpp"
#include "vqa/rng.hpp"

namespace vqa::synth {
namespace {

constexpr double kOpticalBlur = 0.4;
constexpr double kSensorNoise = 0.5;

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// Smoothly interpolated random lattice with spacing `cell`, values in [-1, 1].
Plane value_noise(int w, int h, int cell, Rng& rng) {
  const int gw = w / cell + 2;
  const int gh = h / cell + 2;
  std::vector<double> lattice(static_cast<std::size_t>(gw) * gh);
  for (auto& v : lattice) v = 2.0 * rng.uniform() - 1.0;
  Plane out(w, h);
  for (int y = 0; y < h; ++y) {
    const int gy = y / cell;
    const double ty = smoothstep(static_cast<double>(y % cell) / cell);
    for (int x = 0; x < w; ++x) {
      const int gx = x / cell;
      const double tx = smoothstep(static_cast<double>(x % cell) / cell);
      auto at = [&](int i, int j) { return lattice[static_cast<std::size_t>(j) * gw + i]; };
      const double top = at(gx, gy) * (1 - tx) + at(gx + 1, gy) * tx;
      const double bot = at(gx, gy + 1) * (1 - tx) + at(gx + 1, gy + 1) * tx;
      out(x, y) = top * (1 - ty) + bot * ty;
    }
  }
  return out;
}

// Sum of random plane waves with amplitude ~ 1/f (a 1/f^2 power spectrum, as in
// natural images), normalized to unit standard deviation.
Plane pink_texture(int w, int h, Rng& rng) {
  constexpr int kWaves = 240;
  constexpr double kFmin = 1.0 / 256.0;
  constexpr double kFmax = 0.5;
  Plane out(w, h);
  std::vector<double> cx(w), sx(w), cy(h), sy(h);
  for (int k = 0; k < kWaves; ++k) {
    const double f = kFmin * std::pow(kFmax / kFmin, rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    const double amp = 1.0 / f;
    const double wx = 2.0 * std::numbers::pi * f * std::cos(theta);
    const double wy = 2.0 * std::numbers::pi * f * std::sin(theta);
    for (int x = 0; x < w; ++x) {
      cx[x] = std::cos(wx * x + phase);
      sx[x] = std::sin(wx * x + phase);
    }
    for (int y = 0; y < h; ++y) {
      cy[y] = amp * std::cos(wy * y);
      sy[y] = amp * std::sin(wy * y);
    }
    for (int y = 0; y < h; ++y) {
      double* row = &out.data[static_cast<std::size_t>(y) * w];
      for (int x = 0; x < w; ++x) row[x] += cx[x] * cy[y] - sx[x] * sy[y];
    }
  }
  double mean = 0.0, sq = 0.0;
  for (double v : out.data) mean += v;
  mean /= static_cast<double>(out.data.size());
  for (double v : out.data) sq += (v - mean) * (v - mean);
  const double sd = std::sqrt(sq / static_cast<double>(out.data.size()));
  for (auto& v : out.data) v = (v - mean) / sd;
  return out;
}

struct Ellipse {
  double cx, cy, rx, ry, angle;

  bool contains(double x, double y) const {
    const double c = std::cos(angle), s = std::sin(angle);
    const double dx = x - cx, dy = y - cy;
    const double u = (c * dx + s * dy) / rx;
    const double v = (-s * dx + c * dy) / ry;
    return u * u + v * v <= 1.0;
  }
};

struct Fill {
  double base;
  double texture_amp;
  double shade_x;
  double shade_y;
  int tex_dx;
  int tex_dy;
};

void paint(Plane& canvas, const Ellipse& e, const Fill& f, const Plane& texture) {
  const double reach = std::max(e.rx, e.ry);
  const int x0 = std::max(0, static_cast<int>(std::floor(e.cx - reach)));
  const int x1 = std::min(canvas.width - 1, static_cast<int>(std::ceil(e.cx + reach)));
  const int y0 = std::max(0, static_cast<int>(std::floor(e.cy - reach)));
  const int y1 = std::min(canvas.height - 1, static_cast<int>(std::ceil(e.cy + reach)));
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      if (!e.contains(x, y)) continue;
      const int tx = ((x + f.tex_dx) % texture.width + texture.width) % texture.width;
      const int ty = ((y + f.tex_dy) % texture.height + texture.height) % texture.height;
      canvas(x, y) = f.base + f.texture_amp * texture(tx, ty) + f.shade_x * (x - e.cx) + f.shade_y * (y - e.cy);
    }
}

Fill random_fill(Rng& rng, const Plane& texture) {
  return {40.0 + 170.0 * rng.uniform(),
          8.0 * std::pow(10.0, rng.uniform()),
          (rng.uniform() - 0.5) * 0.6,
          (rng.uniform() - 0.5) * 0.6,
          static_cast<int>(rng.uniform() * texture.width),
          static_cast<int>(rng.uniform() * texture.height)};
}

Plane scene_plane(int w, int h, Rng& rng) {
  const Plane texture = pink_texture(w, h, rng);
  const Plane low = value_noise(w, h, 48, rng);
  Plane canvas(w, h);
  for (std::size_t i = 0; i < canvas.data.size(); ++i) canvas.data[i] = 128.0 + 50.0 * low.data[i] + 20.0 * texture.data[i];

  // power-law radii: density ~ r^-3 between rmin and rmax
  const double rmin = 5.0;
  const double rmax = std::max(rmin + 1.0, std::min(w, h) / 3.0);
  const int leaves = static_cast<int>(w * h / 600);
  for (int i = 0; i < leaves; ++i) {
    const double u = rng.uniform();
    const double r = rmin * rmax / std::sqrt(rmax * rmax - u * (rmax * rmax - rmin * rmin));
    const double aspect = 0.4 + 0.6 * rng.uniform();
    const Ellipse e{rng.uniform() * w, rng.uniform() * h, r, r * aspect, rng.uniform() * std::numbers::pi};
    paint(canvas, e, random_fill(rng, texture), texture);
  }
  return canvas;
}

Frame finish(const Plane& canvas, Rng& noise) {
  Plane p = filter_replicate(canvas, gaussian_kernel(2 * 2 + 1, kOpticalBlur));
  // soft knee into [10, 245] instead of hard clipping, so no flat saturated areas
  for (auto& v : p.data) v = 127.5 + 117.5 * std::tanh((v - 127.5) / 117.5) + kSensorNoise * noise.gaussian();
  for (auto& v : p.data) v = std::clamp(v, 10.0, 245.0);
  return to_frame(p);
}

}  // namespace

Frame natural_scene(int width, int height, std::uint64_t seed) {
  Rng rng(seed);
  const Plane canvas = scene_plane(width, height, rng);
  return finish(canvas, rng);
}

std::string_view to_string(Motion m) {
  switch (m) {
    case Motion::talking_head: return "talking_head";
    case Motion::slow_object: return "slow_object";
    case Motion::global_pan: return "global_pan";
  }
  return "unknown";
}

VideoSequence video(Motion kind, int width, int height, int frames, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Frame> out;
  out.reserve(static_cast<std::size_t>(frames));
  const double w = width, h = height;

  switch (kind) {
    case Motion::talking_head: {
      const Plane bg = scene_plane(width, height, rng);
      const Plane skin = pink_texture(width, height, rng);
      for (int t = 0; t < frames; ++t) {
        Plane c = bg;
        const double sway = 2.0 * std::sin(0.3 * t);
        const double cx = 0.5 * w + sway;
        const double cy = 0.58 * h;
        paint(c, {cx, 0.95 * h, 0.3 * w, 0.25 * h, 0}, {60, 10, 0, 0.05, 5, 9}, skin);          // shoulders
        paint(c, {cx, cy - 0.17 * h, 0.15 * w, 0.2 * h, 0}, {45, 14, 0, 0, 31, 4}, skin);       // hair
        paint(c, {cx, cy, 0.13 * w, 0.23 * h, 0}, {175, 9, 0.08, -0.05, 0, 0}, skin);           // face
        paint(c, {cx - 0.05 * w, cy - 0.05 * h, 0.018 * w, 0.012 * h, 0}, {40, 4, 0, 0, 3, 3}, skin);
        paint(c, {cx + 0.05 * w, cy - 0.05 * h, 0.018 * w, 0.012 * h, 0}, {40, 4, 0, 0, 7, 3}, skin);
        const double open = 0.004 * h + 0.02 * h * std::abs(std::sin(0.7 * t));
        paint(c, {cx, cy + 0.11 * h, 0.04 * w, open, 0}, {70, 6, 0, 0, 11, 13}, skin);          // mouth
        out.push_back(finish(c, rng));
      }
      break;
    }
    case Motion::slow_object: {
      const Plane bg = scene_plane(width, height, rng);
      const Plane hide = pink_texture(width, height, rng);
      for (int t = 0; t < frames; ++t) {
        Plane c = bg;
        const double cx = 0.3 * w + 1.5 * t;
        const double cy = 0.6 * h + 0.5 * std::sin(0.2 * t);
        paint(c, {cx, cy, 0.18 * w, 0.14 * h, 0.05}, {95, 26, 0.1, 0.15, 0, 0}, hide);
        paint(c, {cx + 0.17 * w, cy - 0.06 * h, 0.07 * w, 0.06 * h, -0.3}, {85, 24, 0.1, 0.1, 17, 5}, hide);
        paint(c, {cx - 0.1 * w, cy + 0.12 * h, 0.025 * w, 0.07 * h, 0}, {70, 20, 0, 0, 3, 21}, hide);
        paint(c, {cx + 0.08 * w, cy + 0.12 * h, 0.025 * w, 0.07 * h, 0}, {70, 20, 0, 0, 9, 2}, hide);
        out.push_back(finish(c, rng));
      }
      break;
    }
    case Motion::global_pan: {
      const int speed = 3;
      const int wide = width + speed * frames;
      const Plane scene = scene_plane(wide, height, rng);
      const Plane water = pink_texture(wide, height, rng);
      const int horizon = static_cast<int>(0.65 * h);
      for (int t = 0; t < frames; ++t) {
        Plane c(width, height);
        for (int y = 0; y < height; ++y)
          for (int x = 0; x < width; ++x) {
            const int sx = x + speed * t;
            if (y < horizon) {
              c(x, y) = scene(sx, y);
            } else {
              const double ripple = 3.0 * std::sin(0.35 * y + 0.9 * t);
              const int wx = std::clamp(static_cast<int>(sx + ripple), 0, wide - 1);
              c(x, y) = 90.0 + 0.3 * (y - horizon) + 30.0 * water(wx, y);
            }
          }
        out.push_back(finish(c, rng));
      }
      break;
    }
  }
  return VideoSequence(std::move(out), 30.0);
}

}  // namespace vqa::synth
