#include "vqa/channel.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include "vqa/distortion.hpp"

namespace vqa {
namespace {

unsigned gray(unsigned k) { return k ^ (k >> 1); }

struct GridPoint {
  int ix;
  int iy;
};

std::vector<std::pair<std::size_t, std::size_t>> neighbour_pairs(const std::vector<std::complex<double>>& pts,
                                                                 double dmin) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::abs(pts[i] - pts[j]) < dmin * (1.0 + 1e-9)) out.emplace_back(i, j);
  return out;
}

// Steepest-descent label swaps minimizing summed Hamming distance over neighbour pairs.
void optimize_labels(std::vector<unsigned>& labels, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  auto cost = [&] {
    int c = 0;
    for (auto [a, b] : edges) c += std::popcount(labels[a] ^ labels[b]);
    return c;
  };
  int best = cost();
  bool improved = true;
  while (improved) {
    improved = false;
    std::size_t bi = 0, bj = 0;
    int best_swap = best;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        std::swap(labels[i], labels[j]);
        int c = cost();
        std::swap(labels[i], labels[j]);
        if (c < best_swap) {
          best_swap = c;
          bi = i;
          bj = j;
        }
      }
    }
    if (best_swap < best) {
      std::swap(labels[bi], labels[bj]);
      best = best_swap;
      improved = true;
    }
  }
}

}  // namespace

int bits_per_symbol(Modulation m) {
  switch (m) {
    case Modulation::qpsk: return 2;
    case Modulation::qam16: return 4;
    case Modulation::qam32: return 5;
    case Modulation::qam64: return 6;
  }
  throw std::invalid_argument("unsupported modulation");
}

std::string_view to_string(Modulation m) {
  switch (m) {
    case Modulation::qpsk: return "qpsk";
    case Modulation::qam16: return "qam16";
    case Modulation::qam32: return "qam32";
    case Modulation::qam64: return "qam64";
  }
  throw std::invalid_argument("unsupported modulation");
}

Modulation parse_modulation(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "qpsk") return Modulation::qpsk;
  if (s == "qam16") return Modulation::qam16;
  if (s == "qam32") return Modulation::qam32;
  if (s == "qam64") return Modulation::qam64;
  throw std::invalid_argument("unsupported modulation '" + std::string(name) + "'");
}

Constellation build_constellation(Modulation m) {
  Constellation c;
  c.bits_per_symbol = bits_per_symbol(m);
  std::vector<GridPoint> grid_pts;

  if (m == Modulation::qam32) {
    c.levels_ = 6;
    for (int iy = 0; iy < 6; ++iy)
      for (int ix = 0; ix < 6; ++ix) {
        const bool corner = (ix == 0 || ix == 5) && (iy == 0 || iy == 5);
        if (!corner) grid_pts.push_back({ix, iy});
      }
  } else {
    const int per_axis = c.bits_per_symbol / 2;
    c.levels_ = 1 << per_axis;
    for (int ix = 0; ix < c.levels_; ++ix)
      for (int iy = 0; iy < c.levels_; ++iy) grid_pts.push_back({ix, iy});
  }

  double energy = 0.0;
  for (auto g : grid_pts) {
    const double x = 2 * g.ix - (c.levels_ - 1);
    const double y = 2 * g.iy - (c.levels_ - 1);
    energy += x * x + y * y;
  }
  c.scale_ = std::sqrt(energy / static_cast<double>(grid_pts.size()));

  c.grid_.assign(static_cast<std::size_t>(c.levels_) * c.levels_, -1);
  for (std::size_t i = 0; i < grid_pts.size(); ++i) {
    const auto g = grid_pts[i];
    c.points.emplace_back((2 * g.ix - (c.levels_ - 1)) / c.scale_, (2 * g.iy - (c.levels_ - 1)) / c.scale_);
    c.grid_[static_cast<std::size_t>(g.ix) * c.levels_ + g.iy] = static_cast<int>(i);
  }

  if (m == Modulation::qam32) {
    c.labels.resize(grid_pts.size());
    for (std::size_t i = 0; i < grid_pts.size(); ++i) c.labels[i] = static_cast<unsigned>(i);
    optimize_labels(c.labels, neighbour_pairs(c.points, c.min_distance()));
  } else {
    const int per_axis = c.bits_per_symbol / 2;
    for (auto g : grid_pts) c.labels.push_back((gray(g.ix) << per_axis) | gray(g.iy));
  }

  c.by_label_.assign(std::size_t{1} << c.bits_per_symbol, 0);
  for (std::size_t i = 0; i < c.labels.size(); ++i) c.by_label_[c.labels[i]] = i;
  return c;
}

const Constellation& constellation(Modulation m) {
  static const Constellation table[] = {build_constellation(Modulation::qpsk), build_constellation(Modulation::qam16),
                                        build_constellation(Modulation::qam32), build_constellation(Modulation::qam64)};
  return table[static_cast<int>(m)];
}

std::size_t Constellation::nearest(std::complex<double> r) const {
  auto axis = [&](double v) {
    const double k = std::round((v * scale_ + (levels_ - 1)) / 2.0);
    return static_cast<int>(std::clamp(k, 0.0, static_cast<double>(levels_ - 1)));
  };
  const int idx = grid_[static_cast<std::size_t>(axis(r.real())) * levels_ + axis(r.imag())];
  if (idx >= 0) return static_cast<std::size_t>(idx);
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = std::norm(points[i] - r);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double Constellation::min_distance() const {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) d = std::min(d, std::abs(points[i] - points[j]));
  return d;
}

double gray_penalty(const Constellation& c) {
  const auto edges = neighbour_pairs(c.points, c.min_distance());
  int total = 0;
  for (auto [a, b] : edges) total += std::popcount(c.labels[a] ^ c.labels[b]);
  return static_cast<double>(total) / static_cast<double>(edges.size());
}

ChannelLink::ChannelLink(const ChannelConfig& config)
    : c_(&constellation(config.modulation)),
      sigma_(std::sqrt(0.5 / std::pow(10.0, config.snr_db / 10.0))),
      rng_(config.seed) {
  if (!std::isfinite(config.snr_db)) throw std::invalid_argument("SNR must be finite");
}

std::vector<std::uint8_t> ChannelLink::transmit(std::span<const std::uint8_t> bits) {
  const int bps = c_->bits_per_symbol;
  std::vector<std::uint8_t> out(bits.size());
  for (std::size_t base = 0; base < bits.size(); base += static_cast<std::size_t>(bps)) {
    unsigned label = 0;
    for (int b = 0; b < bps; ++b) {
      const std::size_t i = base + static_cast<std::size_t>(b);
      label = (label << 1) | (i < bits.size() ? (bits[i] & 1u) : 0u);
    }
    const auto tx = c_->points[c_->index_of(label)];
    const double ni = sigma_ * rng_.gaussian();
    const double nq = sigma_ * rng_.gaussian();
    const unsigned rx = c_->labels[c_->nearest(tx + std::complex<double>(ni, nq))];
    for (int b = 0; b < bps; ++b) {
      const std::size_t i = base + static_cast<std::size_t>(b);
      if (i < bits.size()) out[i] = static_cast<std::uint8_t>((rx >> (bps - 1 - b)) & 1u);
    }
  }
  return out;
}

std::vector<std::uint8_t> transmit_bits(std::span<const std::uint8_t> bits, const ChannelConfig& config) {
  ChannelLink link(config);
  return link.transmit(bits);
}

VideoSequence transmit_video(const VideoSequence& seq, const ChannelConfig& config, TransmitStats* stats) {
  ChannelLink link(config);
  const int w = seq.width();
  const int h = seq.height();
  const int mbw = (w + kMacroblock - 1) / kMacroblock;
  const int mbh = (h + kMacroblock - 1) / kMacroblock;

  TransmitStats local;
  std::vector<Frame> out;
  out.reserve(seq.size());
  std::vector<std::uint8_t> bits;
  for (const auto& f : seq.frames()) {
    std::vector<std::uint8_t> pixels(f.luma().begin(), f.luma().end());
    const Frame* prev = out.empty() ? nullptr : &out.back();
    for (int my = 0; my < mbh; ++my) {
      for (int mx = 0; mx < mbw; ++mx) {
        bits.clear();
        for (int y = my * kMacroblock; y < std::min((my + 1) * kMacroblock, h); ++y) {
          auto r = f.row(y);
          for (int x = mx * kMacroblock; x < std::min((mx + 1) * kMacroblock, w); ++x)
            for (int b = 7; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((r[x] >> b) & 1));
        }
        const auto rx = link.transmit(bits);
        std::uint64_t errors = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) errors += bits[i] != rx[i];
        local.bits += bits.size();
        local.bit_errors += errors;
        ++local.macroblocks;
        if (errors) {
          ++local.macroblocks_lost;
          conceal_macroblock(pixels, w, h, mx, my, prev);
        }
      }
    }
    out.emplace_back(w, h, std::move(pixels));
  }
  if (stats) *stats = local;
  return VideoSequence(std::move(out), seq.frame_rate());
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace vqa
