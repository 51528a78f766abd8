#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vqa/channel.hpp"
#include "vqa/frame.hpp"
#include "vqa/nr_metrics.hpp"

namespace vqa {

class UndefinedCorrelation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sample Pearson correlation. Needs >= 3 points and two non-constant sequences.
double pearson(std::span<const double> xs, std::span<const double> ys);
/// Same, but an undefined correlation (constant input) is nullopt instead of an error.
std::optional<double> try_pearson(std::span<const double> xs, std::span<const double> ys);

enum class SweepKind { snr, modulation, compression };
std::string_view to_string(SweepKind k);
SweepKind parse_sweep_kind(std::string_view s);

enum class Metric { psnr, ssim, blockiness, blur, niqe, brisque };
inline constexpr std::array<Metric, 6> kAllMetrics = {Metric::psnr,       Metric::ssim, Metric::blockiness,
                                                      Metric::blur,       Metric::niqe, Metric::brisque};
std::string_view to_string(Metric m);
Metric parse_metric(std::string_view s);
/// Axis label with units, e.g. "PSNR (dB)".
std::string_view metric_label(Metric m);

struct MetricScores {
  double psnr = 0;
  double ssim = 0;
  double blockiness = 0;
  double blur = 0;
  double niqe = 0;
  double brisque = 0;

  double get(Metric m) const;
};

struct NrModels {
  MvgModel niqe;
  BrisqueRegressor brisque;
};

/// All six metrics of `dist` against `orig`, each averaged over frames.
MetricScores score_sequence(const VideoSequence& orig, const VideoSequence& dist, const NrModels& models);

struct SweepSource {
  std::string id;
  VideoSequence video;
};

struct SweepConfig {
  SweepKind kind = SweepKind::snr;
  std::vector<SweepSource> inputs;
  /// snr: Es/N0 points in dB; compression: JPEG qualities. Unused for modulation.
  std::vector<double> axis;
  /// modulation sweep axis, ordered by bits per symbol
  std::vector<Modulation> modulations = {Modulation::qpsk, Modulation::qam16, Modulation::qam32, Modulation::qam64};
  Modulation fixed_modulation = Modulation::qam32;  ///< snr sweep
  std::vector<double> fixed_snrs = {10, 13, 15};     ///< modulation sweep rows
  std::uint64_t seed = 1;
  int threads = 0;

  static SweepConfig defaults(SweepKind kind);
};

struct SweepRecord {
  std::string input;
  SweepKind kind = SweepKind::snr;
  double axis_value = 0;  ///< dB, bits/symbol, or JPEG quality
  MetricScores scores;
};

struct CorrelationEntry {
  std::string input;
  Metric metric = Metric::ssim;
  std::optional<double> r;  ///< nullopt renders as "n/a"
  int n_points = 0;
};

struct CorrelationReport {
  std::vector<CorrelationEntry> entries;

  /// Entry lookup; throws std::out_of_range if absent.
  const CorrelationEntry& at(std::string_view input, Metric metric) const;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  CorrelationReport report;
};

/// Validates axis length (>= 3) and ordering; throws std::invalid_argument.
void validate(const SweepConfig& config);

SweepResult run_snr_sweep(const SweepConfig& config, const NrModels& models);
SweepResult run_modulation_sweep(const SweepConfig& config, const NrModels& models);
SweepResult run_compression_sweep(const SweepConfig& config, const NrModels& models);
SweepResult run_sweep(const SweepConfig& config, const NrModels& models);

/// JPEG-coded copies of every pristine frame at each quality, labelled with their PSNR.
std::vector<LabeledFrame> auto_label(std::span<const Frame> pristine, std::span<const int> qualities);

/// Per input: Pearson r of every non-PSNR metric against PSNR over its records.
CorrelationReport correlate(std::span<const SweepRecord> records);

// ---------------------------------------------------------------------------
// Reports

inline constexpr std::string_view kRecordsHeader = "input,axis_kind,axis_value,psnr_db,ssim,blockiness_db,blur,niqe,brisque";
inline constexpr std::string_view kCorrelationsHeader = "input,metric,pearson_r,n_points";

/// 6 significant digits, trailing zeros kept ("100.000").
std::string format_sig6(double v);

std::string emit_records_csv(std::span<const SweepRecord> records);
std::string emit_correlations_csv(const CorrelationReport& report);
std::vector<SweepRecord> parse_records_csv(std::string_view text);

/// Line chart: metric score on x, swept axis on y, one polyline per input.
std::string emit_svg_plot(std::span<const SweepRecord> records, Metric metric);

}  // namespace vqa
