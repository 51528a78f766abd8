#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "vqa/harness.hpp"

namespace vqa {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string_view axis_label(SweepKind k) {
  switch (k) {
    case SweepKind::snr: return "Channel SNR Es/N0 (dB)";
    case SweepKind::modulation: return "Modulation (bits/symbol)";
    case SweepKind::compression: return "JPEG quality (%)";
  }
  return "";
}

}  // namespace

std::string format_sig6(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("format_sig6: non-finite value");
  return fmt("%#.6g", v);
}

std::string emit_records_csv(std::span<const SweepRecord> records) {
  if (records.empty()) throw std::invalid_argument("emit_records_csv: no records");
  std::vector<SweepRecord> sorted(records.begin(), records.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.input != b.input) return a.input < b.input;
    return a.axis_value < b.axis_value;
  });
  std::string out(kRecordsHeader);
  out += '\n';
  for (const auto& r : sorted) {
    out += csv_field(r.input);
    out += ',';
    out += to_string(r.kind);
    out += ',';
    out += format_sig6(r.axis_value);
    for (Metric m : kAllMetrics) {
      out += ',';
      out += format_sig6(r.scores.get(m));
    }
    out += '\n';
  }
  return out;
}

std::string emit_correlations_csv(const CorrelationReport& report) {
  std::vector<CorrelationEntry> sorted = report.entries;
  std::stable_sort(sorted.begin(), sorted.end(), [](const CorrelationEntry& a, const CorrelationEntry& b) {
    if (a.input != b.input) return a.input < b.input;
    return a.metric < b.metric;
  });
  std::string out(kCorrelationsHeader);
  out += '\n';
  for (const auto& e : sorted) {
    out += csv_field(e.input);
    out += ',';
    out += to_string(e.metric);
    out += ',';
    out += e.r ? format_sig6(*e.r) : "n/a";
    out += ',';
    out += std::to_string(e.n_points);
    out += '\n';
  }
  return out;
}

std::vector<SweepRecord> parse_records_csv(std::string_view text) {
  std::vector<SweepRecord> out;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != kRecordsHeader) throw std::invalid_argument("records csv: bad header");
      header = false;
      continue;
    }
    auto f = split_csv_line(line);
    if (f.size() != 9) throw std::invalid_argument("records csv: expected 9 fields");
    auto num = [](const std::string& s) {
      char* e = nullptr;
      double v = std::strtod(s.c_str(), &e);
      if (e == s.c_str() || *e != '\0') throw std::invalid_argument("records csv: bad number '" + s + "'");
      return v;
    };
    SweepRecord r;
    r.input = f[0];
    r.kind = parse_sweep_kind(f[1]);
    r.axis_value = num(f[2]);
    r.scores = {num(f[3]), num(f[4]), num(f[5]), num(f[6]), num(f[7]), num(f[8])};
    out.push_back(std::move(r));
  }
  if (header) throw std::invalid_argument("records csv: missing header");
  return out;
}

std::string emit_svg_plot(std::span<const SweepRecord> records, Metric metric) {
  if (records.empty()) throw std::invalid_argument("emit_svg_plot: no records");
  const SweepKind kind = records.front().kind;
  for (const auto& r : records)
    if (r.kind != kind) throw std::invalid_argument("emit_svg_plot: records mix axis kinds");

  std::map<std::string, std::vector<std::pair<double, double>>> series;  // input -> (axis, score)
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& r : records) {
    const double x = r.scores.get(metric);
    series[r.input].emplace_back(r.axis_value, x);
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, r.axis_value), ymax = std::max(ymax, r.axis_value);
  }
  auto widen = [](double& lo, double& hi) {
    if (hi - lo < 1e-12) {
      const double pad = std::max(1.0, std::abs(lo) * 0.05);
      lo -= pad, hi += pad;
    }
  };
  widen(xmin, xmax);
  widen(ymin, ymax);

  constexpr double W = 720, H = 480, L = 80, R = 200, T = 40, B = 60;
  const double pw = W - L - R, ph = H - T - B;
  auto sx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return T + ph - (y - ymin) / (ymax - ymin) * ph; };
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" viewBox=\"0 0 720 480\" "
       "font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  s += "<rect x=\"" + fmt("%.2f", L) + "\" y=\"" + fmt("%.2f", T) + "\" width=\"" + fmt("%.2f", pw) + "\" height=\"" +
       fmt("%.2f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4, yv = ymin + (ymax - ymin) * i / 4;
    s += "<text x=\"" + fmt("%.2f", sx(xv)) + "\" y=\"" + fmt("%.2f", T + ph + 18) + "\" text-anchor=\"middle\">" +
         fmt("%.4g", xv) + "</text>\n";
    s += "<text x=\"" + fmt("%.2f", L - 8) + "\" y=\"" + fmt("%.2f", sy(yv) + 4) + "\" text-anchor=\"end\">" +
         fmt("%.4g", yv) + "</text>\n";
  }
  s += "<text x=\"" + fmt("%.2f", L + pw / 2) + "\" y=\"" + fmt("%.2f", H - 15) + "\" text-anchor=\"middle\">" +
       xml_escape(metric_label(metric)) + "</text>\n";
  s += "<text transform=\"translate(20," + fmt("%.2f", T + ph / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
       xml_escape(axis_label(kind)) + "</text>\n";

  std::size_t idx = 0;
  for (auto& [input, pts] : series) {
    std::stable_sort(pts.begin(), pts.end());
    const char* color = kColors[idx % std::size(kColors)];
    s += "<polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += ' ';
      s += fmt("%.2f", sx(pts[i].second)) + "," + fmt("%.2f", sy(pts[i].first));
    }
    s += "\"/>\n";
    const double ly = T + 10 + 20.0 * static_cast<double>(idx);
    s += "<line x1=\"" + fmt("%.2f", W - R + 15) + "\" y1=\"" + fmt("%.2f", ly) + "\" x2=\"" + fmt("%.2f", W - R + 40) +
         "\" y2=\"" + fmt("%.2f", ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + fmt("%.2f", W - R + 45) + "\" y=\"" + fmt("%.2f", ly + 4) + "\">" + xml_escape(input) +
         "</text>\n";
    ++idx;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace vqa
