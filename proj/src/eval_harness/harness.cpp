#include "vqa/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

#include "vqa/distortion.hpp"
#include "vqa/error.hpp"
#include "vqa/fr_metrics.hpp"
#include "vqa/parallel.hpp"

namespace vqa {

namespace {

bool is_constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

std::string snr_tag(double snr) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%gdB", snr);
  return buf;
}

}  // namespace

std::optional<double> try_pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: sequences differ in length");
  if (xs.size() < 3) throw std::invalid_argument("pearson: need at least 3 points");
  if (is_constant(xs) || is_constant(ys)) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0 || syy <= 0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  auto r = try_pearson(xs, ys);
  if (!r) throw UndefinedCorrelation("pearson: constant sequence");
  return *r;
}

std::string_view to_string(SweepKind k) {
  switch (k) {
    case SweepKind::snr: return "snr";
    case SweepKind::modulation: return "modulation";
    case SweepKind::compression: return "compression";
  }
  return "?";
}

SweepKind parse_sweep_kind(std::string_view s) {
  for (auto k : {SweepKind::snr, SweepKind::modulation, SweepKind::compression})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown sweep kind '" + std::string(s) + "'");
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::psnr: return "psnr";
    case Metric::ssim: return "ssim";
    case Metric::blockiness: return "blockiness";
    case Metric::blur: return "blur";
    case Metric::niqe: return "niqe";
    case Metric::brisque: return "brisque";
  }
  return "?";
}

Metric parse_metric(std::string_view s) {
  for (auto m : kAllMetrics)
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown metric '" + std::string(s) + "'");
}

std::string_view metric_label(Metric m) {
  switch (m) {
    case Metric::psnr: return "PSNR (dB)";
    case Metric::ssim: return "SSIM (unitless)";
    case Metric::blockiness: return "Blockiness (dB)";
    case Metric::blur: return "Blur (0-10)";
    case Metric::niqe: return "NIQE (distance)";
    case Metric::brisque: return "BRISQUE (predicted PSNR dB)";
  }
  return "?";
}

double MetricScores::get(Metric m) const {
  switch (m) {
    case Metric::psnr: return psnr;
    case Metric::ssim: return ssim;
    case Metric::blockiness: return blockiness;
    case Metric::blur: return blur;
    case Metric::niqe: return niqe;
    case Metric::brisque: return brisque;
  }
  return 0;
}

MetricScores score_sequence(const VideoSequence& orig, const VideoSequence& dist, const NrModels& models) {
  if (orig.size() != dist.size() || orig.width() != dist.width() || orig.height() != dist.height())
    throw DimensionMismatch("score_sequence: sequences differ in shape");
  MetricScores s;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const Frame& a = orig[i];
    const Frame& b = dist[i];
    s.psnr += psnr(a, b);
    s.ssim += ssim(a, b);
    s.blockiness += blockiness(b);
    s.blur += blur(b);
    s.niqe += niqe_score(b, models.niqe);
    s.brisque += brisque_score(b, models.brisque);
  }
  const double n = static_cast<double>(dist.size());
  for (double* v : {&s.psnr, &s.ssim, &s.blockiness, &s.blur, &s.niqe, &s.brisque}) *v /= n;
  return s;
}

SweepConfig SweepConfig::defaults(SweepKind kind) {
  SweepConfig c;
  c.kind = kind;
  if (kind == SweepKind::snr)
    for (int s = 10; s <= 20; ++s) c.axis.push_back(s);
  if (kind == SweepKind::compression)
    for (int q = 10; q <= 90; q += 10) c.axis.push_back(q);
  return c;
}

void validate(const SweepConfig& config) {
  if (config.inputs.empty()) throw std::invalid_argument("sweep: no inputs");
  if (config.kind == SweepKind::modulation) {
    if (config.modulations.size() < 3) throw std::invalid_argument("sweep: axis needs at least 3 points");
    for (std::size_t i = 1; i < config.modulations.size(); ++i)
      if (bits_per_symbol(config.modulations[i]) <= bits_per_symbol(config.modulations[i - 1]))
        throw std::invalid_argument("sweep: modulations must increase in bits per symbol");
    if (config.fixed_snrs.empty()) throw std::invalid_argument("sweep: no fixed SNR");
    return;
  }
  if (config.axis.size() < 3) throw std::invalid_argument("sweep: axis needs at least 3 points");
  for (std::size_t i = 1; i < config.axis.size(); ++i)
    if (!(config.axis[i] > config.axis[i - 1])) throw std::invalid_argument("sweep: axis must be strictly increasing");
  if (config.kind == SweepKind::compression)
    for (double q : config.axis)
      if (q != std::floor(q) || q < 1 || q > 100) throw std::invalid_argument("sweep: JPEG quality must be an integer in 1..100");
}

CorrelationReport correlate(std::span<const SweepRecord> records) {
  std::map<std::string, std::vector<const SweepRecord*>> groups;
  for (const auto& r : records) groups[r.input].push_back(&r);
  CorrelationReport report;
  for (const auto& [input, rows] : groups) {
    std::vector<double> ps;
    for (const auto* r : rows) ps.push_back(r->scores.psnr);
    for (Metric m : kAllMetrics) {
      if (m == Metric::psnr) continue;
      std::vector<double> ms;
      for (const auto* r : rows) ms.push_back(r->scores.get(m));
      CorrelationEntry e{input, m, std::nullopt, static_cast<int>(rows.size())};
      if (rows.size() >= 3) e.r = try_pearson(ms, ps);
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

const CorrelationEntry& CorrelationReport::at(std::string_view input, Metric metric) const {
  for (const auto& e : entries)
    if (e.input == input && e.metric == metric) return e;
  throw std::out_of_range("no correlation for " + std::string(input) + "/" + std::string(to_string(metric)));
}

namespace {

void sort_records(std::vector<SweepRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.input != b.input) return a.input < b.input;
    return a.axis_value < b.axis_value;
  });
}

void require_kind(const SweepConfig& config, SweepKind kind) {
  if (config.kind != kind)
    throw std::invalid_argument("sweep: config kind is " + std::string(to_string(config.kind)) + ", expected " +
                                std::string(to_string(kind)));
  validate(config);
}

}  // namespace

SweepResult run_snr_sweep(const SweepConfig& config, const NrModels& models) {
  require_kind(config, SweepKind::snr);
  const std::size_t na = config.axis.size();
  std::vector<SweepRecord> records(config.inputs.size() * na);
  parallel_for(
      records.size(),
      [&](std::size_t i) {
        const auto& src = config.inputs[i / na];
        const double snr = config.axis[i % na];
        ChannelConfig ch{snr, config.fixed_modulation, config.seed + i};
        VideoSequence rx = transmit_video(src.video, ch);
        records[i] = {src.id, SweepKind::snr, snr, score_sequence(src.video, rx, models)};
      },
      config.threads);
  sort_records(records);
  SweepResult out{std::move(records), {}};
  out.report = correlate(out.records);
  return out;
}

SweepResult run_modulation_sweep(const SweepConfig& config, const NrModels& models) {
  require_kind(config, SweepKind::modulation);
  const std::size_t nm = config.modulations.size();
  const std::size_t ns = config.fixed_snrs.size();
  std::vector<SweepRecord> records(config.inputs.size() * ns * nm);
  parallel_for(
      records.size(),
      [&](std::size_t i) {
        const auto& src = config.inputs[i / (ns * nm)];
        const double snr = config.fixed_snrs[(i / nm) % ns];
        const Modulation mod = config.modulations[i % nm];
        ChannelConfig ch{snr, mod, config.seed + i};
        VideoSequence rx = transmit_video(src.video, ch);
        records[i] = {src.id + "@" + snr_tag(snr), SweepKind::modulation, static_cast<double>(bits_per_symbol(mod)),
                      score_sequence(src.video, rx, models)};
      },
      config.threads);
  sort_records(records);
  SweepResult out{std::move(records), {}};
  out.report = correlate(out.records);

  // Per-SNR rows: correlation computed per video, then averaged over videos.
  std::vector<CorrelationEntry> means;
  for (double snr : config.fixed_snrs) {
    for (Metric m : kAllMetrics) {
      if (m == Metric::psnr) continue;
      double sum = 0;
      int count = 0;
      for (const auto& src : config.inputs) {
        const auto& e = out.report.at(src.id + "@" + snr_tag(snr), m);
        if (e.r) sum += *e.r, ++count;
      }
      CorrelationEntry e{"mean@" + snr_tag(snr), m, std::nullopt, static_cast<int>(nm)};
      if (count > 0) e.r = std::clamp(sum / count, -1.0, 1.0);
      means.push_back(std::move(e));
    }
  }
  out.report.entries.insert(out.report.entries.end(), means.begin(), means.end());
  return out;
}

SweepResult run_compression_sweep(const SweepConfig& config, const NrModels& models) {
  require_kind(config, SweepKind::compression);
  const std::size_t na = config.axis.size();
  std::vector<SweepRecord> records(config.inputs.size() * na);
  parallel_for(
      records.size(),
      [&](std::size_t i) {
        const auto& src = config.inputs[i / na];
        const double q = config.axis[i % na];
        const Frame& still = src.video[0];
        VideoSequence orig({still});
        VideoSequence coded({jpeg_emulate(still, JpegQuality(static_cast<int>(q)))});
        records[i] = {src.id, SweepKind::compression, q, score_sequence(orig, coded, models)};
      },
      config.threads);
  sort_records(records);
  SweepResult out{std::move(records), {}};
  out.report = correlate(out.records);
  return out;
}

SweepResult run_sweep(const SweepConfig& config, const NrModels& models) {
  switch (config.kind) {
    case SweepKind::snr: return run_snr_sweep(config, models);
    case SweepKind::modulation: return run_modulation_sweep(config, models);
    case SweepKind::compression: return run_compression_sweep(config, models);
  }
  throw std::invalid_argument("sweep: bad kind");
}

std::vector<LabeledFrame> auto_label(std::span<const Frame> pristine, std::span<const int> qualities) {
  std::vector<LabeledFrame> out;
  for (const Frame& f : pristine)
    for (int q : qualities) {
      Frame coded = jpeg_emulate(f, JpegQuality(q));
      const double label = psnr(f, coded);
      out.push_back({std::move(coded), label});
    }
  return out;
}

}  // namespace vqa
