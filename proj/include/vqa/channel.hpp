#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqa/frame.hpp"
#include "vqa/rng.hpp"

namespace vqa {

enum class Modulation { qpsk, qam16, qam32, qam64 };

int bits_per_symbol(Modulation m);
std::string_view to_string(Modulation m);
/// Accepts "qpsk", "qam16", "qam32", "qam64" (case-insensitive).
Modulation parse_modulation(std::string_view name);

struct ChannelConfig {
  double snr_db = 20.0;  ///< Es/N0 in dB with unit symbol energy
  Modulation modulation = Modulation::qam32;
  std::uint64_t seed = 1;
};

/// Unit-average-energy constellation with a bit labeling.
/// labels[i] is the bit pattern (MSB first) carried by points[i].
struct Constellation {
  std::vector<std::complex<double>> points;
  std::vector<unsigned> labels;
  int bits_per_symbol = 0;

  /// Point index for a label.
  std::size_t index_of(unsigned label) const { return by_label_[label]; }
  /// Hard-decision nearest point.
  std::size_t nearest(std::complex<double> r) const;
  /// Smallest Euclidean distance between two points.
  double min_distance() const;

 private:
  friend Constellation build_constellation(Modulation m);
  std::vector<std::size_t> by_label_;
  // per-axis grid of odd integers scaled by 1/scale_; grid_[ix * levels_ + iy] = point or -1
  int levels_ = 0;
  double scale_ = 1.0;
  std::vector<int> grid_;
};

/// Square Gray grids for QPSK/16/64-QAM; 32-QAM is the 6x6 cross without corners with
/// a quasi-Gray labeling found by local search over nearest-neighbour Hamming cost.
Constellation build_constellation(Modulation m);
/// Cached, immutable instance per modulation.
const Constellation& constellation(Modulation m);

/// Mean Hamming distance over all nearest-neighbour point pairs (1.0 is perfect Gray).
double gray_penalty(const Constellation& c);

/// Uncoded link: bits -> symbols -> complex AWGN -> nearest point -> bits.
class ChannelLink {
 public:
  explicit ChannelLink(const ChannelConfig& config);

  /// Zero-pads to a whole number of symbols and strips the padding on return.
  std::vector<std::uint8_t> transmit(std::span<const std::uint8_t> bits);

  double noise_sigma() const { return sigma_; }

 private:
  const Constellation* c_;
  double sigma_;
  Rng rng_;
};

/// Bits are 0/1 bytes. Deterministic for a fixed config.seed.
std::vector<std::uint8_t> transmit_bits(std::span<const std::uint8_t> bits, const ChannelConfig& config);

struct TransmitStats {
  std::uint64_t bits = 0;
  std::uint64_t bit_errors = 0;
  std::uint64_t macroblocks = 0;
  std::uint64_t macroblocks_lost = 0;

  double ber() const { return bits ? static_cast<double>(bit_errors) / static_cast<double>(bits) : 0.0; }
  double loss_fraction() const {
    return macroblocks ? static_cast<double>(macroblocks_lost) / static_cast<double>(macroblocks) : 0.0;
  }
};

/// Sends each 16x16 macroblock's luma bytes (MSB first) as one packet. Any bit error
/// drops the whole macroblock, which is then concealed like block_loss does.
VideoSequence transmit_video(const VideoSequence& seq, const ChannelConfig& config, TransmitStats* stats = nullptr);

/// Q(x) = P(N(0,1) > x).
double q_function(double x);

}  // namespace vqa
