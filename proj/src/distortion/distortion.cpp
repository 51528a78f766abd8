#include "vqa/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqa/dct.hpp"
#include "vqa/filter.hpp"

namespace vqa {

JpegQuality::JpegQuality(int q) : q_(q) {
  if (q < 1 || q > 100) throw std::invalid_argument("JPEG quality must be in [1, 100], got " + std::to_string(q));
}

const std::array<int, 64>& jpeg_luma_table() {
  static constexpr std::array<int, 64> kTable = {
      16, 11, 10, 16, 24,  40,  51,  61,   //
      12, 12, 14, 19, 26,  58,  60,  55,   //
      14, 13, 16, 24, 40,  57,  69,  56,   //
      14, 17, 22, 29, 51,  87,  80,  62,   //
      18, 22, 37, 56, 68,  109, 103, 77,   //
      24, 35, 55, 64, 81,  104, 113, 92,   //
      49, 64, 78, 87, 103, 121, 120, 101,  //
      72, 92, 95, 98, 112, 100, 103, 99};
  return kTable;
}

std::array<int, 64> scaled_quant_table(JpegQuality q) {
  const int s = q.value() < 50 ? 5000 / q.value() : 200 - 2 * q.value();
  std::array<int, 64> out{};
  const auto& base = jpeg_luma_table();
  for (std::size_t i = 0; i < 64; ++i) out[i] = std::clamp((base[i] * s + 50) / 100, 1, 255);
  return out;
}

Frame jpeg_emulate(const Frame& frame, JpegQuality q) {
  const auto table = scaled_quant_table(q);
  const int w = frame.width();
  const int h = frame.height();
  const int pw = (w + 7) / 8 * 8;
  const int ph = (h + 7) / 8 * 8;

  Plane out(w, h);
  Block8 block{};
  for (int by = 0; by < ph; by += 8) {
    for (int bx = 0; bx < pw; bx += 8) {
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x)
          block[y * 8 + x] = frame.at(std::min(bx + x, w - 1), std::min(by + y, h - 1)) - 128.0;
      Block8 c = dct8x8(block);
      for (std::size_t i = 0; i < 64; ++i) c[i] = std::round(c[i] / table[i]) * table[i];
      const Block8 r = idct8x8(c);
      for (int y = 0; y < 8 && by + y < h; ++y)
        for (int x = 0; x < 8 && bx + x < w; ++x) out(bx + x, by + y) = r[y * 8 + x] + 128.0;
    }
  }
  return to_frame(out);
}

void conceal_macroblock(std::vector<std::uint8_t>& out, int width, int height, int mbx, int mby,
                        const Frame* previous) {
  const int x0 = mbx * kMacroblock;
  const int y0 = mby * kMacroblock;
  const int x1 = std::min(x0 + kMacroblock, width);
  const int y1 = std::min(y0 + kMacroblock, height);
  for (int y = y0; y < y1; ++y) {
    auto* dst = out.data() + static_cast<std::size_t>(y) * width;
    if (previous) {
      auto src = previous->row(y);
      std::copy(src.begin() + x0, src.begin() + x1, dst + x0);
    } else {
      std::fill(dst + x0, dst + x1, std::uint8_t{128});
    }
  }
}

VideoSequence block_loss(const VideoSequence& seq, double loss_rate, Rng& rng) {
  if (!(loss_rate >= 0.0 && loss_rate <= 1.0)) throw std::invalid_argument("loss rate must be in [0, 1]");
  const int w = seq.width();
  const int h = seq.height();
  const int mbw = (w + kMacroblock - 1) / kMacroblock;
  const int mbh = (h + kMacroblock - 1) / kMacroblock;

  std::vector<Frame> out;
  out.reserve(seq.size());
  for (const auto& f : seq.frames()) {
    std::vector<std::uint8_t> pixels(f.luma().begin(), f.luma().end());
    const Frame* prev = out.empty() ? nullptr : &out.back();
    for (int my = 0; my < mbh; ++my)
      for (int mx = 0; mx < mbw; ++mx)
        if (rng.uniform() < loss_rate) conceal_macroblock(pixels, w, h, mx, my, prev);
    out.emplace_back(w, h, std::move(pixels));
  }
  return VideoSequence(std::move(out), seq.frame_rate());
}

Frame gaussian_blur(const Frame& frame, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("blur sigma must be positive");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  return to_frame(filter_replicate(Plane(frame), gaussian_kernel(2 * radius + 1, sigma)));
}

Frame awgn(const Frame& frame, double sigma, Rng& rng) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("noise sigma must be non-negative");
  Plane p(frame);
  for (auto& v : p.data) v += sigma * rng.gaussian();
  return to_frame(p);
}

}  // namespace vqa
