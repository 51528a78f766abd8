#include "vqa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "vqa/channel.hpp"
#include "vqa/distortion.hpp"
#include "vqa/error.hpp"
#include "vqa/fr_metrics.hpp"
#include "vqa/frame_io.hpp"
#include "vqa/harness.hpp"
#include "vqa/nr_metrics.hpp"
#include "vqa/synth.hpp"

namespace fs = std::filesystem;

namespace vqa::cli {

namespace {

double parse_number(std::string_view s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
    throw UsageError("not a number: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.6g", v);
  return buf;
}

void save_sequence(const fs::path& path, const VideoSequence& seq) {
  if (path.extension() == ".y4m") {
    write_file_atomic(path, save_y4m(seq));
  } else {
    if (seq.size() != 1) throw UsageError("multi-frame output needs a .y4m path: " + path.string());
    write_file_atomic(path, save_pgm(seq[0]));
  }
}

void write_text(const fs::path& path, const std::string& text) {
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string read_text(const fs::path& path) {
  Bytes b = read_file(path);
  return std::string(b.begin(), b.end());
}

std::vector<fs::path> corpus_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".pgm" || ext == ".y4m")) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<Frame> frames_of(const VideoSequence& seq) { return {seq.frames().begin(), seq.frames().end()}; }

bool is_full_reference(Metric m) { return m == Metric::psnr || m == Metric::ssim; }

// ---------------------------------------------------------------------------

struct ScoreArgs {
  std::string metric, dist, ref, model;
};

int cmd_score(const ScoreArgs& a, std::ostream& out) {
  const Metric metric = parse_metric(a.metric);
  if (is_full_reference(metric) && a.ref.empty())
    throw UsageError(a.metric + " is a full-reference metric and requires --ref");
  if ((metric == Metric::niqe || metric == Metric::brisque) && a.model.empty())
    throw UsageError(a.metric + " requires --model");

  const VideoSequence dist = load_any(a.dist);
  std::optional<VideoSequence> ref;
  if (!a.ref.empty()) {
    ref = load_any(a.ref);
    if (ref->size() != dist.size()) throw DimensionMismatch("--ref and --dist differ in frame count");
  }
  std::optional<MvgModel> niqe;
  std::optional<BrisqueRegressor> brisque;
  if (metric == Metric::niqe) niqe = parse_niqe_model(read_text(a.model));
  if (metric == Metric::brisque) brisque = parse_brisque_model(read_text(a.model));

  std::vector<double> values;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const Frame& f = dist[i];
    switch (metric) {
      case Metric::psnr: values.push_back(psnr((*ref)[i], f)); break;
      case Metric::ssim: values.push_back(ssim((*ref)[i], f)); break;
      case Metric::blockiness: values.push_back(blockiness(f)); break;
      case Metric::blur: values.push_back(blur(f)); break;
      case Metric::niqe: values.push_back(niqe_score(f, *niqe)); break;
      case Metric::brisque: values.push_back(brisque_score(f, *brisque)); break;
    }
  }
  if (values.size() == 1) {
    out << a.metric << ' ' << sig6(values[0]) << '\n';
  } else {
    double sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << "frame " << i << ' ' << sig6(values[i]) << '\n';
      sum += values[i];
    }
    out << "mean " << sig6(sum / static_cast<double>(values.size())) << '\n';
  }
  return kOk;
}

struct DistortArgs {
  std::string kind, in, out;
  double param = 0;
  std::uint64_t seed = 1;
};

int cmd_distort(const DistortArgs& a, std::ostream& out) {
  const VideoSequence src = load_any(a.in);
  std::vector<Frame> frames;
  Rng rng(a.seed);
  if (a.kind == "jpeg") {
    if (a.param != std::floor(a.param) || a.param < 1 || a.param > 100)
      throw UsageError("jpeg --param must be an integer quality in 1..100");
    for (const Frame& f : src.frames()) frames.push_back(jpeg_emulate(f, JpegQuality(static_cast<int>(a.param))));
  } else if (a.kind == "blockloss") {
    if (a.param < 0 || a.param > 1) throw UsageError("blockloss --param is a loss rate in [0, 1]");
    frames = frames_of(block_loss(src, a.param, rng));
  } else if (a.kind == "blur") {
    if (a.param <= 0 || a.param > 50) throw UsageError("blur --param is a sigma in (0, 50]");
    for (const Frame& f : src.frames()) frames.push_back(gaussian_blur(f, a.param));
  } else if (a.kind == "awgn") {
    if (a.param < 0 || a.param > 255) throw UsageError("awgn --param is a sigma in [0, 255]");
    for (const Frame& f : src.frames()) frames.push_back(awgn(f, a.param, rng));
  } else {
    throw UsageError("unknown distortion kind '" + a.kind + "'");
  }
  save_sequence(a.out, VideoSequence(std::move(frames), src.frame_rate()));
  out << "wrote " << a.out << '\n';
  return kOk;
}

struct TransmitArgs {
  std::string mod = "qam32", in, out;
  double snr = 20;
  std::uint64_t seed = 1;
};

int cmd_transmit(const TransmitArgs& a, std::ostream& out) {
  Modulation mod;
  try {
    mod = parse_modulation(a.mod);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VideoSequence src = load_any(a.in);
  TransmitStats stats;
  VideoSequence rx = transmit_video(src, {a.snr, mod, a.seed}, &stats);
  save_sequence(a.out, rx);
  out << "bits " << stats.bits << "\nbit_errors " << stats.bit_errors << "\nber " << sig6(stats.ber())
      << "\nmacroblocks_lost " << stats.macroblocks_lost << '/' << stats.macroblocks << '\n';
  return kOk;
}

struct FitArgs {
  std::string kind, corpus, out, labels;
  bool auto_label = false;
};

int cmd_fit(const FitArgs& a, std::ostream& out) {
  if (a.kind != "niqe" && a.kind != "brisque") throw UsageError("unknown model kind '" + a.kind + "'");
  if (a.kind == "brisque" && a.labels.empty() == !a.auto_label)
    throw UsageError("brisque needs exactly one of --labels or --auto-label");

  std::string text;
  if (a.kind == "niqe") {
    std::vector<Frame> frames;
    for (const auto& p : corpus_files(a.corpus)) {
      const VideoSequence seq = load_any(p);
      frames.insert(frames.end(), seq.frames().begin(), seq.frames().end());
    }
    text = serialize_model(niqe_fit(frames));
  } else if (a.auto_label) {
    std::vector<Frame> frames;
    for (const auto& p : corpus_files(a.corpus)) frames.push_back(load_any(p)[0]);
    static constexpr int kQualities[] = {10, 20, 30, 40, 50, 60, 70, 80, 90};
    text = serialize_model(train_brisque(auto_label(frames, kQualities)));
  } else {
    std::vector<LabeledFrame> corpus;
    const std::string csv = read_text(a.labels);
    std::size_t offset = 0;
    for (auto line : split(csv, '\n')) {
      const std::size_t line_start = offset;
      offset += line.size() + 1;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty()) continue;
      auto f = split(line, ',');
      double label = 0;
      if (f.size() != 2 || std::from_chars(f[1].data(), f[1].data() + f[1].size(), label).ptr != f[1].data() + f[1].size())
        throw ParseError("labels: expected '<file>,<number>'", line_start);
      const VideoSequence seq = load_any(fs::path(a.corpus) / std::string(f[0]));
      for (const Frame& fr : seq.frames()) corpus.push_back({fr, label});
    }
    text = serialize_model(train_brisque(corpus));
  }
  write_text(a.out, text);
  out << "wrote " << a.kind << " model " << a.out << '\n';
  return kOk;
}

struct SweepArgs {
  std::string kind, out_dir, axis, modulations = "qpsk,qam16,qam32,qam64", mod = "qam32", snr = "10,13,15";
  std::string niqe_model, brisque_model;
  std::vector<std::string> inputs;
  std::uint64_t seed = 1;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepKind kind;
  try {
    kind = parse_sweep_kind(a.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SweepConfig config = SweepConfig::defaults(kind);
  config.seed = a.seed;
  try {
    if (!a.axis.empty()) config.axis = parse_axis(a.axis);
    config.fixed_modulation = parse_modulation(a.mod);
    config.fixed_snrs = parse_axis(a.snr);
    config.modulations.clear();
    for (auto m : split(a.modulations, ',')) config.modulations.push_back(parse_modulation(m));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::set<std::string> ids;
  for (const auto& p : a.inputs) {
    std::string id = fs::path(p).stem().string();
    if (!ids.insert(id).second) throw UsageError("duplicate input name '" + id + "'");
    config.inputs.push_back({id, VideoSequence({Frame::filled(1, 1, 0)})});
  }
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (std::size_t i = 0; i < a.inputs.size(); ++i) config.inputs[i].video = load_any(a.inputs[i]);

  NrModels models{parse_niqe_model(read_text(a.niqe_model)), parse_brisque_model(read_text(a.brisque_model))};
  const SweepResult result = run_sweep(config, models);

  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  write_text(dir / "records.csv", emit_records_csv(result.records));
  write_text(dir / "correlations.csv", emit_correlations_csv(result.report));
  for (Metric m : kAllMetrics)
    write_text(dir / (std::string(to_string(m)) + ".svg"), emit_svg_plot(result.records, m));
  out << "records " << result.records.size() << '\n' << emit_correlations_csv(result.report);
  return kOk;
}

struct GenArgs {
  std::string out_dir;
  int scenes = 32, frames = 20, width = 320, height = 240;
  std::uint64_t seed = 1;
};

int cmd_gen_corpus(const GenArgs& a, std::ostream& out) {
  if (a.width < 96 || a.height < 96) throw UsageError("generated frames must be at least 96x96");
  if (a.scenes < 1 || a.frames < 1) throw UsageError("--scenes and --frames must be positive");
  const fs::path dir(a.out_dir);
  fs::create_directories(dir / "pristine");
  fs::create_directories(dir / "videos");
  fs::create_directories(dir / "stills");
  for (int i = 0; i < a.scenes; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "scene_%02d.pgm", i);
    write_file_atomic(dir / "pristine" / name,
                      save_pgm(synth::natural_scene(a.width, a.height, a.seed * 1000 + static_cast<std::uint64_t>(i))));
  }
  std::uint64_t s = a.seed * 1000 + 500;
  for (auto m : {synth::Motion::talking_head, synth::Motion::slow_object, synth::Motion::global_pan}) {
    VideoSequence v = synth::video(m, a.width, a.height, a.frames, s++);
    const std::string name(synth::to_string(m));
    write_file_atomic(dir / "videos" / (name + ".y4m"), save_y4m(v));
    write_file_atomic(dir / "stills" / (name + ".pgm"), save_pgm(v[0]));
  }
  out << "wrote corpus to " << a.out_dir << '\n';
  return kOk;
}

}  // namespace

std::vector<double> parse_axis(std::string_view text) {
  if (text.empty()) throw UsageError("empty axis");
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    auto p = split(text, ':');
    if (p.size() != 3) throw UsageError("axis range must be start:stop:step");
    const double start = parse_number(p[0]), stop = parse_number(p[1]), step = parse_number(p[2]);
    if (step <= 0 || stop < start) throw UsageError("axis range needs step > 0 and stop >= start");
    const double span = (stop - start) / step;
    const auto n = static_cast<long>(std::floor(span + 1e-9));
    if (n > 100000) throw UsageError("axis range too long");
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  } else {
    for (auto s : split(text, ',')) out.push_back(parse_number(s));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Video quality metrics, distortion and channel emulation toolkit", "vqa"};
  app.require_subcommand(1);

  ScoreArgs sa;
  auto* score = app.add_subcommand("score", "Score a distorted image or video with one metric");
  score->add_option("--metric", sa.metric, "psnr|ssim|blockiness|blur|niqe|brisque")->required();
  score->add_option("--dist", sa.dist, "Distorted input (.pgm or .y4m)")->required();
  score->add_option("--ref", sa.ref, "Reference input for psnr/ssim");
  score->add_option("--model", sa.model, "Model file for niqe/brisque");

  DistortArgs da;
  auto* distort = app.add_subcommand("distort", "Apply a synthetic distortion");
  distort->add_option("--kind", da.kind, "jpeg|blockloss|blur|awgn")->required();
  distort->add_option("--param", da.param, "Quality, loss rate, or sigma")->required();
  distort->add_option("--seed", da.seed, "RNG seed");
  distort->add_option("--in", da.in, "Input path")->required();
  distort->add_option("--out", da.out, "Output path (.pgm or .y4m)")->required();

  TransmitArgs ta;
  auto* transmit = app.add_subcommand("transmit", "Send a sequence through the emulated QAM/AWGN link");
  transmit->add_option("--snr", ta.snr, "Es/N0 in dB");
  transmit->add_option("--mod", ta.mod, "qpsk|qam16|qam32|qam64");
  transmit->add_option("--seed", ta.seed, "RNG seed");
  transmit->add_option("--in", ta.in, "Input path")->required();
  transmit->add_option("--out", ta.out, "Output path")->required();

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "Fit a NIQE or BRISQUE model on a corpus directory");
  fit->add_option("--kind", fa.kind, "niqe|brisque")->required();
  fit->add_option("--corpus", fa.corpus, "Directory of .pgm/.y4m files")->required();
  fit->add_option("--out", fa.out, "Model output path")->required();
  fit->add_option("--labels", fa.labels, "CSV of <file>,<label> (brisque)");
  fit->add_flag("--auto-label", fa.auto_label, "Label JPEG q=10..90 copies of each image with their PSNR (brisque)");

  SweepArgs wa;
  auto* sweep = app.add_subcommand("sweep", "Run an evaluation sweep and write CSV/SVG reports");
  sweep->add_option("--kind", wa.kind, "snr|modulation|compression")->required();
  sweep->add_option("--inputs", wa.inputs, "Input files")->required();
  sweep->add_option("--out-dir", wa.out_dir, "Report directory")->required();
  sweep->add_option("--axis", wa.axis, "SNR dB or JPEG quality points, start:stop:step or a,b,c");
  sweep->add_option("--modulations", wa.modulations, "Modulation axis, comma separated");
  sweep->add_option("--mod", wa.mod, "Fixed modulation for the snr sweep");
  sweep->add_option("--snr", wa.snr, "Fixed SNR rows for the modulation sweep");
  sweep->add_option("--seed", wa.seed, "Base RNG seed");
  sweep->add_option("--niqe-model", wa.niqe_model, "NIQE model file")->required();
  sweep->add_option("--brisque-model", wa.brisque_model, "BRISQUE model file")->required();

  GenArgs ga;
  auto* gen = app.add_subcommand("gen-corpus", "Write a synthetic pristine corpus and test sequences");
  gen->add_option("--out-dir", ga.out_dir, "Output directory")->required();
  gen->add_option("--scenes", ga.scenes, "Number of pristine stills");
  gen->add_option("--frames", ga.frames, "Frames per test sequence");
  gen->add_option("--width", ga.width, "Frame width");
  gen->add_option("--height", ga.height, "Frame height");
  gen->add_option("--seed", ga.seed, "Base seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (score->parsed()) return cmd_score(sa, out);
    if (distort->parsed()) return cmd_distort(da, out);
    if (transmit->parsed()) return cmd_transmit(ta, out);
    if (fit->parsed()) return cmd_fit(fa, out);
    if (sweep->parsed()) return cmd_sweep(wa, out);
    if (gen->parsed()) return cmd_gen_corpus(ga, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const ModelFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const InsufficientData& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsage;
}

}  // namespace vqa::cli
