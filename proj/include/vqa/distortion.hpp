#pragma once

#include <array>

#include "vqa/frame.hpp"
#include "vqa/rng.hpp"

namespace vqa {

/// JPEG quality factor, 1..100.
class JpegQuality {
 public:
  explicit JpegQuality(int q);
  int value() const noexcept { return q_; }

 private:
  int q_;
};

/// Annex K luminance table, row-major (index = v*8+u).
const std::array<int, 64>& jpeg_luma_table();
/// IJG quality scaling of the luminance table.
std::array<int, 64> scaled_quant_table(JpegQuality q);

/// Quantization-only JPEG round trip on the luma plane: level shift, 8x8 DCT,
/// quantize/dequantize with the scaled table, inverse DCT. Edges that are not a
/// multiple of 8 are replicate-padded and cropped back.
Frame jpeg_emulate(const Frame& frame, JpegQuality q);

inline constexpr int kMacroblock = 16;

/// Replace a lost macroblock in `out` with the co-located block of `previous`, or
/// mid-grey when there is no previous output frame.
void conceal_macroblock(std::vector<std::uint8_t>& out, int width, int height, int mbx, int mby,
                        const Frame* previous);

/// Each 16x16 macroblock of each frame is lost independently with `loss_rate`
/// and concealed from the previous output frame (mid-grey in frame 0).
VideoSequence block_loss(const VideoSequence& seq, double loss_rate, Rng& rng);

/// Separable Gaussian, radius ceil(3 sigma), replicated borders.
Frame gaussian_blur(const Frame& frame, double sigma);

/// Additive white Gaussian noise, rounded and clamped.
Frame awgn(const Frame& frame, double sigma, Rng& rng);

}  // namespace vqa
