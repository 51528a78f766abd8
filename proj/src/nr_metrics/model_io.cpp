#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "vqa/error.hpp"
#include "vqa/nr_metrics.hpp"

namespace vqa {
namespace {

constexpr std::string_view kMagic = "VQA-MODEL";
constexpr std::string_view kVersion = "v1";

void put(std::string& out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
  out.push_back('\n');
}

std::string header(std::string_view kind, int dim) {
  return std::string(kMagic) + " " + std::string(kind) + " " + std::string(kVersion) + "\n" + std::to_string(dim) +
         "\n";
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (pos_ >= text_.size()) throw ModelFormatError("model file ends early at line " + std::to_string(line_ + 1));
    auto eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) eol = text_.size();
    std::string_view l = text_.substr(pos_, eol - pos_);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    pos_ = eol + 1;
    ++line_;
    return l;
  }

  double number() {
    auto l = next();
    double v = 0.0;
    auto [p, ec] = std::from_chars(l.data(), l.data() + l.size(), v);
    if (ec != std::errc{} || p != l.data() + l.size() || !std::isfinite(v)) {
      throw ModelFormatError("bad number on line " + std::to_string(line_) + ": '" + std::string(l) + "'");
    }
    return v;
  }

  void expect_end() {
    while (pos_ < text_.size()) {
      if (!next().empty()) throw ModelFormatError("trailing data after line " + std::to_string(line_ - 1));
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

int read_header(LineReader& r, std::string_view kind) {
  const std::string want = std::string(kMagic) + " " + std::string(kind) + " " + std::string(kVersion);
  auto first = r.next();
  if (first != want) throw ModelFormatError("expected header '" + want + "', got '" + std::string(first) + "'");
  double d = r.number();
  if (d < 1 || d != std::floor(d) || d > 4096) throw ModelFormatError("bad model dimension");
  return static_cast<int>(d);
}

}  // namespace

std::string serialize_model(const MvgModel& model) {
  const int d = model.dim();
  std::string out = header("niqe", d);
  for (int i = 0; i < d; ++i) put(out, model.mean[i]);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) put(out, model.covariance(r, c));
  return out;
}

std::string serialize_model(const BrisqueRegressor& model) {
  std::string out = header("brisque", static_cast<int>(kFeatureDim));
  for (double w : model.weights) put(out, w);
  for (double v : model.feature_min) put(out, v);
  for (double v : model.feature_max) put(out, v);
  return out;
}

MvgModel parse_niqe_model(std::string_view text) {
  LineReader r(text);
  const int d = read_header(r, "niqe");
  MvgModel m{Eigen::VectorXd(d), Eigen::MatrixXd(d, d)};
  for (int i = 0; i < d; ++i) m.mean[i] = r.number();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.covariance(i, j) = r.number();
  r.expect_end();
  for (int i = 0; i < d; ++i) {
    if (m.covariance(i, i) < 0) throw ModelFormatError("negative covariance diagonal");
    for (int j = 0; j < i; ++j) {
      if (std::abs(m.covariance(i, j) - m.covariance(j, i)) > 1e-9) {
        throw ModelFormatError("covariance is not symmetric");
      }
    }
  }
  return m;
}

BrisqueRegressor parse_brisque_model(std::string_view text) {
  LineReader r(text);
  const int d = read_header(r, "brisque");
  if (d != static_cast<int>(kFeatureDim)) {
    throw ModelFormatError("brisque model dimension " + std::to_string(d) + " != " + std::to_string(kFeatureDim));
  }
  BrisqueRegressor m;
  m.weights.resize(kFeatureDim + 1);
  for (auto& w : m.weights) w = r.number();
  for (auto& v : m.feature_min) v = r.number();
  for (auto& v : m.feature_max) v = r.number();
  r.expect_end();
  for (std::size_t i = 0; i < kFeatureDim; ++i) {
    if (!(m.feature_max[i] > m.feature_min[i])) throw ModelFormatError("empty normalization range");
  }
  return m;
}

}  // namespace vqa
