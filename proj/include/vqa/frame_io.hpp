#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "vqa/frame.hpp"

namespace vqa {

using Bytes = std::vector<std::uint8_t>;

/// Binary PGM ("P5", maxval 255). Header comments are accepted on input.
Frame load_pgm(std::span<const std::uint8_t> bytes);
/// Canonical form: "P5\n<w> <h>\n255\n" followed by the raw samples.
Bytes save_pgm(const Frame& frame);

enum class Y4mChroma { c420, mono };

/// YUV4MPEG2 reader. Only the Y plane is kept; chroma payload is skipped.
/// Accepts C420 (all siting variants), C422, C444 and Cmono at 8 bits.
VideoSequence load_y4m(std::span<const std::uint8_t> bytes);
/// Writes the luma planes; C420 output carries neutral (128) chroma.
Bytes save_y4m(const VideoSequence& seq, Y4mChroma chroma = Y4mChroma::c420);

/// BT.601 luma from three equally sized 8-bit planes.
Frame rgb_to_luma(const Frame& r, const Frame& g, const Frame& b);

Bytes read_file(const std::filesystem::path& path);
/// Writes to a sibling temp file and renames, so a failed write leaves no partial output.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

bool looks_like_y4m(std::span<const std::uint8_t> bytes);
/// Loads a PGM as a one-frame sequence or a Y4M as-is, chosen by magic bytes.
VideoSequence load_any(const std::filesystem::path& path);

}  // namespace vqa
