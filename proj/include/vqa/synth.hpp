#pragma once

#include <cstdint>
#include <string_view>

#include "vqa/frame.hpp"

namespace vqa::synth {

/// Occluding textured ellipses with power-law sizes over a smooth background,
/// softened by a small optical blur plus sensor noise. Intensities stay inside
/// [10, 245]. Same seed, same image.
Frame natural_scene(int width, int height, std::uint64_t seed);

enum class Motion {
  talking_head,  ///< static background, small moving mouth region, slight sway
  slow_object,   ///< one large textured object drifting across a static scene
  global_pan,    ///< camera pan across a wide scene with rippling water
};

std::string_view to_string(Motion m);

VideoSequence video(Motion kind, int width, int height, int frames, std::uint64_t seed);

}  // namespace vqa::synth
