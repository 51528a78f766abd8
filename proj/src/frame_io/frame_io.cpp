#include "vqa/frame_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vqa/error.hpp"

namespace vqa {
namespace {

class PgmHeaderReader {
 public:
  explicit PgmHeaderReader(std::span<const std::uint8_t> b) : b_(b) {}

  std::size_t pos() const { return pos_; }

  void skip_space_and_comments() {
    while (pos_ < b_.size()) {
      if (b_[pos_] == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (std::isspace(b_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long number(const char* what) {
    skip_space_and_comments();
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < b_.size() && std::isdigit(b_[pos_])) {
      v = v * 10 + (b_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return v;
  }

  void single_whitespace() {
    if (pos_ >= b_.size() || !std::isspace(b_[pos_])) {
      throw ParseError("expected whitespace after maxval", pos_);
    }
    ++pos_;
  }

 private:
  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 2;
};

std::string_view as_view(std::span<const std::uint8_t> b, std::size_t from, std::size_t n) {
  return {reinterpret_cast<const char*>(b.data()) + from, n};
}

std::size_t find_newline(std::span<const std::uint8_t> b, std::size_t from) {
  for (std::size_t i = from; i < b.size(); ++i) {
    if (b[i] == '\n') return i;
  }
  return b.size();
}

struct Y4mHeader {
  int width = 0;
  int height = 0;
  double frame_rate = 30.0;
  std::size_t chroma_bytes = 0;
};

std::size_t chroma_bytes_for(std::string_view tag, int w, int h, std::size_t offset) {
  auto cw420 = static_cast<std::size_t>((w + 1) / 2);
  auto ch420 = static_cast<std::size_t>((h + 1) / 2);
  if (tag.starts_with("420") && (tag == "420" || tag == "420jpeg" || tag == "420paldv" || tag == "420mpeg2")) {
    return 2 * cw420 * ch420;
  }
  if (tag == "422") return 2 * cw420 * static_cast<std::size_t>(h);
  if (tag == "444") return 2 * static_cast<std::size_t>(w) * h;
  if (tag == "mono") return 0;
  throw ParseError("unsupported Y4M colorspace C" + std::string(tag), offset);
}

Y4mHeader parse_y4m_header(std::span<const std::uint8_t> b, std::size_t& pos) {
  constexpr std::string_view kSig = "YUV4MPEG2";
  if (b.size() < kSig.size() || as_view(b, 0, kSig.size()) != kSig) {
    throw ParseError("missing YUV4MPEG2 signature", 0);
  }
  std::size_t eol = find_newline(b, 0);
  if (eol == b.size()) throw ParseError("unterminated Y4M header", b.size());

  Y4mHeader h;
  std::optional<std::string_view> chroma_tag;
  std::size_t chroma_offset = 0;
  std::size_t i = kSig.size();
  while (i < eol) {
    while (i < eol && b[i] == ' ') ++i;
    std::size_t start = i;
    while (i < eol && b[i] != ' ') ++i;
    if (start == i) break;
    std::string_view tok = as_view(b, start, i - start);
    std::string_view val = tok.substr(1);
    switch (tok[0]) {
      case 'W':
      case 'H': {
        int v = 0;
        for (char c : val) {
          if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad dimension tag", start);
          v = v * 10 + (c - '0');
          if (v > 65536) throw ParseError("dimension too large", start);
        }
        if (v <= 0) throw ParseError("bad dimension tag", start);
        (tok[0] == 'W' ? h.width : h.height) = v;
        break;
      }
      case 'F': {
        auto colon = val.find(':');
        if (colon != std::string_view::npos) {
          double num = std::stod(std::string(val.substr(0, colon)));
          double den = std::stod(std::string(val.substr(colon + 1)));
          if (den > 0) h.frame_rate = num / den;
        }
        break;
      }
      case 'C':
        chroma_tag = val;
        chroma_offset = start;
        break;
      default:  // I, A, X: irrelevant to luma metrics
        break;
    }
  }
  if (h.width == 0) throw ParseError("missing W tag", eol);
  if (h.height == 0) throw ParseError("missing H tag", eol);
  h.chroma_bytes = chroma_bytes_for(chroma_tag.value_or("420"), h.width, h.height, chroma_offset);
  pos = eol + 1;
  return h;
}

std::string frame_rate_tag(double fps) {
  double rounded = std::round(fps);
  if (std::abs(fps - rounded) < 1e-9) return std::to_string(static_cast<long>(rounded)) + ":1";
  return std::to_string(std::lround(fps * 1001.0)) + ":1001";
}

}  // namespace

Frame load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError("wrong magic, expected P5", 0);
  }
  PgmHeaderReader r(bytes);
  long w = r.number("width");
  long h = r.number("height");
  std::size_t maxval_at = r.pos();
  long maxval = r.number("maxval");
  if (maxval != 255) throw ParseError("unsupported maxval " + std::to_string(maxval), maxval_at);
  if (w <= 0 || h <= 0) throw ParseError("zero dimension", maxval_at);
  r.single_whitespace();
  std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  if (bytes.size() - r.pos() < need) throw ParseError("truncated payload", bytes.size());
  auto payload = bytes.subspan(r.pos(), need);
  return Frame(static_cast<int>(w), static_cast<int>(h), std::vector<std::uint8_t>(payload.begin(), payload.end()));
}

Bytes save_pgm(const Frame& frame) {
  std::string header = "P5\n" + std::to_string(frame.width()) + " " + std::to_string(frame.height()) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.insert(out.end(), frame.luma().begin(), frame.luma().end());
  return out;
}

VideoSequence load_y4m(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  Y4mHeader h = parse_y4m_header(bytes, pos);
  const std::size_t luma = static_cast<std::size_t>(h.width) * h.height;

  std::vector<Frame> frames;
  constexpr std::string_view kFrame = "FRAME";
  while (pos < bytes.size()) {
    if (bytes.size() - pos < kFrame.size() || as_view(bytes, pos, kFrame.size()) != kFrame) {
      throw ParseError("expected FRAME marker", pos);
    }
    std::size_t eol = find_newline(bytes, pos);
    if (eol == bytes.size()) throw ParseError("unterminated FRAME header", pos);
    pos = eol + 1;
    if (bytes.size() - pos < luma + h.chroma_bytes) throw ParseError("truncated frame", bytes.size());
    auto y = bytes.subspan(pos, luma);
    frames.emplace_back(h.width, h.height, std::vector<std::uint8_t>(y.begin(), y.end()));
    pos += luma + h.chroma_bytes;
  }
  if (frames.empty()) throw ParseError("stream has no frames", pos);
  return VideoSequence(std::move(frames), h.frame_rate);
}

Bytes save_y4m(const VideoSequence& seq, Y4mChroma chroma) {
  const int w = seq.width();
  const int h = seq.height();
  std::string header = "YUV4MPEG2 W" + std::to_string(w) + " H" + std::to_string(h) + " F" +
                       frame_rate_tag(seq.frame_rate()) + " Ip A1:1 " +
                       (chroma == Y4mChroma::mono ? "Cmono" : "C420jpeg") + "\n";
  const std::size_t chroma_bytes =
      chroma == Y4mChroma::mono ? 0 : 2 * static_cast<std::size_t>((w + 1) / 2) * ((h + 1) / 2);

  Bytes out(header.begin(), header.end());
  constexpr std::string_view kFrame = "FRAME\n";
  for (const auto& f : seq.frames()) {
    out.insert(out.end(), kFrame.begin(), kFrame.end());
    out.insert(out.end(), f.luma().begin(), f.luma().end());
    out.insert(out.end(), chroma_bytes, std::uint8_t{128});
  }
  return out;
}

Frame rgb_to_luma(const Frame& r, const Frame& g, const Frame& b) {
  if (!r.same_shape(g) || !r.same_shape(b)) throw DimensionMismatch("rgb planes differ in size");
  std::vector<std::uint8_t> y(r.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    double v = 0.299 * r.luma()[i] + 0.587 * g.luma()[i] + 0.114 * b.luma()[i];
    y[i] = static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0));
  }
  return Frame(r.width(), r.height(), std::move(y));
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

bool looks_like_y4m(std::span<const std::uint8_t> bytes) {
  constexpr std::string_view kSig = "YUV4MPEG2";
  return bytes.size() >= kSig.size() && as_view(bytes, 0, kSig.size()) == kSig;
}

VideoSequence load_any(const std::filesystem::path& path) {
  Bytes b = read_file(path);
  if (looks_like_y4m(b)) return load_y4m(b);
  return VideoSequence({load_pgm(b)});
}

}  // namespace vqa
