#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "vqa/channel.hpp"
#include "vqa/distortion.hpp"
#include "vqa/error.hpp"
#include "vqa/fr_metrics.hpp"
#include "vqa/frame_io.hpp"
#include "vqa/harness.hpp"
#include "vqa/nr_metrics.hpp"
#include "vqa/synth.hpp"

namespace py = pybind11;
using namespace vqa;

namespace {

using Image = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

Frame to_frame(const Image& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-D uint8 array (height, width)");
  const auto h = static_cast<int>(a.shape(0));
  const auto w = static_cast<int>(a.shape(1));
  const std::uint8_t* p = a.data();
  return Frame(w, h, std::vector<std::uint8_t>(p, p + a.size()));
}

Image to_array(const Frame& f) {
  Image a({f.height(), f.width()});
  std::copy(f.luma().begin(), f.luma().end(), a.mutable_data());
  return a;
}

VideoSequence to_sequence(const std::vector<Image>& frames, double fps = 30.0) {
  std::vector<Frame> out;
  out.reserve(frames.size());
  for (const auto& a : frames) out.push_back(to_frame(a));
  return VideoSequence(std::move(out), fps);
}

std::vector<Image> to_list(const VideoSequence& seq) {
  std::vector<Image> out;
  for (const Frame& f : seq.frames()) out.push_back(to_array(f));
  return out;
}

std::vector<Frame> frames_of(const std::vector<Image>& images) {
  std::vector<Frame> out;
  for (const auto& a : images) out.push_back(to_frame(a));
  return out;
}

py::dict scores_dict(const MetricScores& s) {
  py::dict d;
  for (Metric m : kAllMetrics) d[py::str(std::string(to_string(m)))] = s.get(m);
  return d;
}

py::dict stats_dict(const TransmitStats& s) {
  py::dict d;
  d["bits"] = s.bits;
  d["bit_errors"] = s.bit_errors;
  d["macroblocks"] = s.macroblocks;
  d["macroblocks_lost"] = s.macroblocks_lost;
  d["ber"] = s.ber();
  d["loss_fraction"] = s.loss_fraction();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Video quality metrics, distortion models and channel sweeps.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_ValueError);
  py::register_exception<ModelFormatError>(m, "ModelFormatError", PyExc_ValueError);
  py::register_exception<UndefinedCorrelation>(m, "UndefinedCorrelation", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  // I/O
  m.def("load", [](const std::string& path) { return to_list(load_any(path)); }, py::arg("path"),
        "Frames of a PGM image or Y4M video, as 2-D uint8 luma arrays.");
  m.def("load_pgm_bytes", [](py::bytes b) {
    const std::string s = b;
    return to_array(load_pgm(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size())));
  });
  m.def("load_y4m_bytes", [](py::bytes b) {
    const std::string s = b;
    return to_list(load_y4m(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size())));
  });
  m.def("save_pgm", [](const std::string& path, const Image& img) {
    write_file_atomic(path, save_pgm(to_frame(img)));
  }, py::arg("path"), py::arg("image"));
  m.def("save_y4m", [](const std::string& path, const std::vector<Image>& frames, double fps) {
    write_file_atomic(path, save_y4m(to_sequence(frames, fps)));
  }, py::arg("path"), py::arg("frames"), py::arg("fps") = 30.0);

  // Full-reference metrics
  m.def("mse", [](const Image& a, const Image& b) { return mse(to_frame(a), to_frame(b)); });
  m.def("psnr", [](const Image& a, const Image& b) { return psnr(to_frame(a), to_frame(b)); });
  m.def("ssim", [](const Image& a, const Image& b) { return ssim(to_frame(a), to_frame(b)); });

  // No-reference metrics
  m.def("blockiness", [](const Image& a) { return blockiness(to_frame(a)); });
  m.def("blur", [](const Image& a) { return blur(to_frame(a)); });
  m.def("brisque_features", [](const Image& a) { return brisque_features(to_frame(a)); });

  py::class_<MvgModel>(m, "NiqeModel")
      .def_static("fit", [](const std::vector<Image>& pristine) {
        const std::vector<Frame> frames = frames_of(pristine);
        py::gil_scoped_release nogil;
        return niqe_fit(frames);
      }, py::arg("pristine"))
      .def_static("from_text", [](const std::string& t) { return parse_niqe_model(t); })
      .def("to_text", [](const MvgModel& mdl) { return serialize_model(mdl); })
      .def("score", [](const MvgModel& mdl, const Image& a) { return niqe_score(to_frame(a), mdl); })
      .def_property_readonly("dim", &MvgModel::dim);

  py::class_<BrisqueRegressor>(m, "BrisqueModel")
      .def_static("train", [](const std::vector<Image>& images, const std::vector<double>& labels, double lambda) {
        if (images.size() != labels.size()) throw std::invalid_argument("images and labels differ in length");
        std::vector<LabeledFrame> corpus;
        for (std::size_t i = 0; i < images.size(); ++i) corpus.push_back({to_frame(images[i]), labels[i]});
        py::gil_scoped_release nogil;
        return train_brisque(corpus, lambda);
      }, py::arg("images"), py::arg("labels"), py::arg("lam") = kRidgeLambda)
      .def_static("auto_train", [](const std::vector<Image>& pristine, const std::vector<int>& qualities) {
        const std::vector<Frame> frames = frames_of(pristine);
        py::gil_scoped_release nogil;
        return train_brisque(auto_label(frames, qualities));
      }, py::arg("pristine"), py::arg("qualities") = std::vector<int>{10, 20, 30, 40, 50, 60, 70, 80, 90})
      .def_static("from_text", [](const std::string& t) { return parse_brisque_model(t); })
      .def("to_text", [](const BrisqueRegressor& mdl) { return serialize_model(mdl); })
      .def("score", [](const BrisqueRegressor& mdl, const Image& a) { return brisque_score(to_frame(a), mdl); });

  // Distortions
  m.def("jpeg", [](const Image& a, int q) { return to_array(jpeg_emulate(to_frame(a), JpegQuality(q))); },
        py::arg("image"), py::arg("quality"));
  m.def("gaussian_blur", [](const Image& a, double sigma) { return to_array(gaussian_blur(to_frame(a), sigma)); },
        py::arg("image"), py::arg("sigma"));
  m.def("awgn", [](const Image& a, double sigma, std::uint64_t seed) {
    Rng rng(seed);
    return to_array(awgn(to_frame(a), sigma, rng));
  }, py::arg("image"), py::arg("sigma"), py::arg("seed") = 1);
  m.def("block_loss", [](const std::vector<Image>& frames, double rate, std::uint64_t seed) {
    Rng rng(seed);
    return to_list(block_loss(to_sequence(frames), rate, rng));
  }, py::arg("frames"), py::arg("loss_rate"), py::arg("seed") = 1);

  // Channel
  m.def("bits_per_symbol", [](const std::string& mod) { return bits_per_symbol(parse_modulation(mod)); });
  m.def("transmit", [](const std::vector<Image>& frames, double snr_db, const std::string& mod, std::uint64_t seed) {
    const VideoSequence seq = to_sequence(frames);
    const ChannelConfig cfg{snr_db, parse_modulation(mod), seed};
    TransmitStats st;
    VideoSequence rx = [&] {
      py::gil_scoped_release nogil;
      return transmit_video(seq, cfg, &st);
    }();
    return py::make_tuple(to_list(rx), stats_dict(st));
  }, py::arg("frames"), py::arg("snr_db"), py::arg("modulation") = "qam32", py::arg("seed") = 1,
     "Sends every 16x16 macroblock over uncoded QAM/AWGN; returns (frames, stats).");

  // Harness
  m.def("pearson", [](const std::vector<double>& xs, const std::vector<double>& ys) { return pearson(xs, ys); });
  m.def("score", [](const std::vector<Image>& orig, const std::vector<Image>& dist, const MvgModel& niqe,
                    const BrisqueRegressor& brisque) {
    const VideoSequence a = to_sequence(orig), b = to_sequence(dist);
    const NrModels models{niqe, brisque};
    MetricScores s = [&] {
      py::gil_scoped_release nogil;
      return score_sequence(a, b, models);
    }();
    return scores_dict(s);
  }, py::arg("original"), py::arg("distorted"), py::arg("niqe"), py::arg("brisque"));

  m.def("run_sweep", [](const std::string& kind, const std::map<std::string, std::vector<Image>>& inputs,
                        const MvgModel& niqe, const BrisqueRegressor& brisque, std::optional<std::vector<double>> axis,
                        std::optional<std::vector<std::string>> modulations, std::optional<std::string> modulation,
                        std::optional<std::vector<double>> snrs, std::uint64_t seed, int threads) {
    SweepConfig cfg = SweepConfig::defaults(parse_sweep_kind(kind));
    for (const auto& [id, frames] : inputs) cfg.inputs.push_back({id, to_sequence(frames)});
    if (axis) cfg.axis = *axis;
    if (modulations) {
      cfg.modulations.clear();
      for (const auto& s : *modulations) cfg.modulations.push_back(parse_modulation(s));
    }
    if (modulation) cfg.fixed_modulation = parse_modulation(*modulation);
    if (snrs) cfg.fixed_snrs = *snrs;
    cfg.seed = seed;
    cfg.threads = threads;
    const NrModels models{niqe, brisque};
    SweepResult res = [&] {
      py::gil_scoped_release nogil;
      return run_sweep(cfg, models);
    }();
    py::list records;
    for (const auto& r : res.records) {
      py::dict d = scores_dict(r.scores);
      d["input"] = r.input;
      d["axis_value"] = r.axis_value;
      records.append(d);
    }
    py::list correlations;
    for (const auto& e : res.report.entries) {
      py::dict d;
      d["input"] = e.input;
      d["metric"] = std::string(to_string(e.metric));
      d["r"] = e.r ? py::object(py::float_(*e.r)) : py::none();
      d["n_points"] = e.n_points;
      correlations.append(d);
    }
    py::dict out;
    out["records"] = records;
    out["correlations"] = correlations;
    out["records_csv"] = emit_records_csv(res.records);
    out["correlations_csv"] = emit_correlations_csv(res.report);
    return out;
  }, py::arg("kind"), py::arg("inputs"), py::arg("niqe"), py::arg("brisque"), py::arg("axis") = py::none(),
     py::arg("modulations") = py::none(), py::arg("modulation") = py::none(), py::arg("snrs") = py::none(),
     py::arg("seed") = 1, py::arg("threads") = 0);

  // Synthetic content
  m.def("natural_scene", [](int w, int h, std::uint64_t seed) { return to_array(synth::natural_scene(w, h, seed)); },
        py::arg("width"), py::arg("height"), py::arg("seed"));
  m.def("synth_video", [](const std::string& kind, int w, int h, int frames, std::uint64_t seed) {
    synth::Motion mo;
    if (kind == "talking_head") mo = synth::Motion::talking_head;
    else if (kind == "slow_object") mo = synth::Motion::slow_object;
    else if (kind == "global_pan") mo = synth::Motion::global_pan;
    else throw std::invalid_argument("unknown motion: " + kind);
    return to_list(synth::video(mo, w, h, frames, seed));
  }, py::arg("kind"), py::arg("width"), py::arg("height"), py::arg("frames"), py::arg("seed"));
}
