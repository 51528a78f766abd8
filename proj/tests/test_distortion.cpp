#include <doctest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"
#include "vqa/distortion.hpp"
#include "vqa/fr_metrics.hpp"
#include "vqa/rng.hpp"
#include "vqa/synth.hpp"

using namespace vqa;

namespace {

double mean_of(const Frame& f) {
  return std::accumulate(f.luma().begin(), f.luma().end(), 0.0) / static_cast<double>(f.size());
}

double variance_of(const Frame& f) {
  const double m = mean_of(f);
  double v = 0;
  for (auto p : f.luma()) v += (p - m) * (p - m);
  return v / static_cast<double>(f.size());
}

}  // namespace

TEST_CASE("rng: seed-stable streams") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    if (i == 0) CHECK(x != c.next_u64());
  }
  Rng u(1);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = u.uniform();
    CHECK((x >= 0.0 && x < 1.0));
    const double g = u.gaussian();
    sum += g;
    sq += g * g;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sq / n - 1) < 0.01);
}

TEST_CASE("jpeg quality range") {
  CHECK_THROWS_AS(JpegQuality(0), std::invalid_argument);
  CHECK_THROWS_AS(JpegQuality(101), std::invalid_argument);
  CHECK(JpegQuality(1).value() == 1);
  CHECK(JpegQuality(100).value() == 100);
}

TEST_CASE("jpeg quantization table scaling") {
  const auto& base = jpeg_luma_table();
  CHECK(base[0] == 16);
  CHECK(base[63] == 99);
  CHECK(scaled_quant_table(JpegQuality(50)) == base);
  for (int q : {1, 10, 25, 49, 50, 51, 75, 90, 100}) {
    const int s = q < 50 ? 5000 / q : 200 - 2 * q;
    const auto t = scaled_quant_table(JpegQuality(q));
    for (std::size_t i = 0; i < 64; ++i) CHECK(t[i] == std::clamp((base[i] * s + 50) / 100, 1, 255));
  }
  for (int v : scaled_quant_table(JpegQuality(100))) CHECK(v == 1);
}

TEST_CASE("jpeg emulation: quality ordering, flat input, idempotence") {
  for (std::uint64_t s : {1, 2, 3}) {
    const Frame f = synth::natural_scene(120, 90, s);
    CHECK(psnr(f, jpeg_emulate(f, JpegQuality(90))) > psnr(f, jpeg_emulate(f, JpegQuality(10))));
    CHECK(psnr(f, jpeg_emulate(f, JpegQuality(100))) >= 45.0);
    CHECK(jpeg_emulate(f, JpegQuality(37)) == jpeg_emulate(f, JpegQuality(37)));
  }
  const Frame gray = Frame::filled(40, 24, 128);
  CHECK(psnr(gray, jpeg_emulate(gray, JpegQuality(10))) >= 50.0);
}

TEST_CASE("generators preserve dimensions") {
  vqa::test::for_all(20, 31, [](vqa::test::Gen& g) {
    const Frame f = g.any_frame(1, 37);
    Rng rng(g.engine()());
    CHECK(jpeg_emulate(f, JpegQuality(g.int_in(1, 100))).same_shape(f));
    CHECK(gaussian_blur(f, g.real_in(0.3, 3)).same_shape(f));
    CHECK(awgn(f, g.real_in(0, 30), rng).same_shape(f));
    const VideoSequence out = block_loss(VideoSequence({f, f}), g.real_in(0, 1), rng);
    CHECK(out.size() == 2);
    CHECK(out[1].same_shape(f));
  });
}

TEST_CASE("block loss: extremes") {
  const VideoSequence seq = synth::video(synth::Motion::slow_object, 64, 48, 3, 5);
  Rng rng(1);
  CHECK(block_loss(seq, 0.0, rng) == seq);
  const VideoSequence one({synth::natural_scene(40, 40, 3)});
  CHECK(block_loss(one, 1.0, rng)[0] == Frame::filled(40, 40, 128));
  // with every block lost, each frame conceals from an all-grey previous output
  const VideoSequence all_lost = block_loss(seq, 1.0, rng);
  for (const Frame& f : all_lost.frames()) CHECK(f == Frame::filled(64, 48, 128));
  CHECK_THROWS_AS(block_loss(seq, 1.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(block_loss(seq, -0.1, rng), std::invalid_argument);
}

TEST_CASE("block loss: empirical rate and concealment source") {
  const VideoSequence one({Frame::filled(1600, 1600, 7)});
  Rng rng(2024);
  const Frame out = block_loss(one, 0.3, rng)[0];
  int lost = 0;
  for (int by = 0; by < 100; ++by)
    for (int bx = 0; bx < 100; ++bx) lost += out.at(bx * 16 + 3, by * 16 + 5) == 128;
  CHECK(lost >= 2800);
  CHECK(lost <= 3200);

  // second-frame losses are filled from the first output frame
  const Frame a = Frame::filled(32, 32, 10), b = Frame::filled(32, 32, 200);
  Rng r2(9);
  const VideoSequence two = block_loss(VideoSequence({a, b}), 0.5, r2);
  for (int by = 0; by < 2; ++by)
    for (int bx = 0; bx < 2; ++bx) {
      const auto prev = two[0].at(bx * 16, by * 16), cur = two[1].at(bx * 16, by * 16);
      CHECK((cur == 200 || cur == prev));
    }
}

TEST_CASE("block loss: seed determinism") {
  const VideoSequence seq = synth::video(synth::Motion::talking_head, 96, 64, 4, 8);
  Rng a(77), b(77);
  CHECK(block_loss(seq, 0.4, a) == block_loss(seq, 0.4, b));
}

TEST_CASE("gaussian blur") {
  CHECK(gaussian_blur(Frame::filled(20, 10, 66), 1.7) == Frame::filled(20, 10, 66));
  vqa::test::Gen g(6);
  const Frame f = g.ramp_noise(80, 60, 25);
  const Frame b = gaussian_blur(f, 1.5);
  CHECK(std::abs(mean_of(b) - mean_of(f)) <= 1.0);
  CHECK(variance_of(b) < variance_of(f));
  CHECK_THROWS_AS(gaussian_blur(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_blur(f, -1.0), std::invalid_argument);
}

TEST_CASE("awgn") {
  const Frame gray = Frame::filled(256, 256, 128);
  Rng r0(1);
  CHECK(awgn(gray, 0.0, r0) == gray);
  Rng r1(2);
  const double m = mse(gray, awgn(gray, 10.0, r1));
  CHECK(m >= 80);
  CHECK(m <= 120);
  const Frame f = synth::natural_scene(128, 96, 12);
  double last = INFINITY;
  for (double s : {2.0, 5.0, 10.0, 20.0}) {
    Rng r(3);
    const double p = psnr(f, awgn(f, s, r));
    CHECK(p < last);
    last = p;
  }
  Rng a(4), b(4);
  CHECK(awgn(f, 7.0, a) == awgn(f, 7.0, b));
  CHECK_THROWS_AS(awgn(f, -1.0, a), std::invalid_argument);
}
