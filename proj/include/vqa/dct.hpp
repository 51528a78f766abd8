#pragma once

#include <array>

namespace vqa {

using Block8 = std::array<double, 64>;  // row-major, index = v * 8 + u

/// Orthonormal 2-D DCT-II of an 8x8 block; out[v*8+u] holds horizontal frequency u
/// and vertical frequency v.
Block8 dct8x8(const Block8& in);
/// Inverse of dct8x8 (orthonormal DCT-III).
Block8 idct8x8(const Block8& in);

}  // namespace vqa
