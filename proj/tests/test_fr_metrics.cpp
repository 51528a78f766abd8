#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "support.hpp"
#include "vqa/distortion.hpp"
#include "vqa/error.hpp"
#include "vqa/filter.hpp"
#include "vqa/fr_metrics.hpp"
#include "vqa/synth.hpp"

using namespace vqa;

TEST_CASE("mse: worked values") {
  CHECK(mse(Frame::filled(4, 3, 9), Frame::filled(4, 3, 9)) == 0.0);
  CHECK(mse(Frame::filled(3, 3, 0), Frame::filled(3, 3, 255)) == 65025.0);
  CHECK(mse(Frame(2, 2, {0, 0, 0, 0}), Frame(2, 2, {1, 2, 3, 4})) == 7.5);
  CHECK_THROWS_AS(mse(Frame::filled(2, 2, 0), Frame::filled(2, 3, 0)), DimensionMismatch);
}

TEST_CASE("psnr: cap, zero and worked value") {
  Frame f = vqa::test::Gen(1).frame(16, 16);
  auto d = psnr_detail(f, f);
  CHECK(d.db == kPsnrCapDb);
  CHECK(d.identical);
  CHECK(psnr(Frame::filled(5, 5, 0), Frame::filled(5, 5, 255)) == doctest::Approx(0.0).epsilon(1e-12));
  // 10 log10(65025 / 7.5)
  CHECK(psnr(Frame(2, 2, {0, 0, 0, 0}), Frame(2, 2, {1, 2, 3, 4})) == doctest::Approx(39.38020).epsilon(1e-6));
  CHECK_FALSE(psnr_detail(Frame(2, 2, {0, 0, 0, 0}), Frame(2, 2, {1, 2, 3, 4})).identical);
  CHECK_THROWS_AS(psnr(Frame::filled(2, 2, 0), Frame::filled(3, 2, 0)), DimensionMismatch);
}

TEST_CASE("ssim params") {
  SsimParams p;
  CHECK(p.c1() == doctest::Approx(6.5025));
  CHECK(p.c2() == doctest::Approx(58.5225));
  auto k = p.kernel();
  CHECK(k.size() == 11);
  double sum = 0;
  for (double a : k)
    for (double b : k) sum += a * b;
  CHECK(std::abs(sum - 1.0) < 1e-12);
  const auto ref = vqa::test::naive_gaussian(11, 1.5);
  for (std::size_t i = 0; i < k.size(); ++i) CHECK(k[i] == doctest::Approx(ref[i]).epsilon(1e-14));
}

TEST_CASE("ssim: identity, symmetry, bounds") {
  vqa::test::for_all(40, 21, [](vqa::test::Gen& g) {
    const int w = g.int_in(11, 40), h = g.int_in(11, 40);
    Frame a = g.frame(w, h), b = g.frame(w, h);
    CHECK(ssim(a, a) == 1.0);
    CHECK(ssim(a, b) == doctest::Approx(ssim(b, a)).epsilon(1e-12));
    Plane m = ssim_map(a, b);
    CHECK(m.width == w - 10);
    CHECK(m.height == h - 10);
    for (double v : m.data) CHECK(std::abs(v) <= 1.0 + 1e-12);
    CHECK(std::accumulate(m.data.begin(), m.data.end(), 0.0) / static_cast<double>(m.data.size()) ==
          doctest::Approx(ssim(a, b)).epsilon(1e-12));
  });
}

TEST_CASE("ssim: identical frames give an all-ones map") {
  Frame f = vqa::test::Gen(3).frame(20, 14);
  for (double v : ssim_map(f, f).data) CHECK(v == 1.0);
  Frame flat = Frame::filled(12, 12, 77);
  CHECK(ssim(flat, flat) == 1.0);
}

TEST_CASE("ssim: errors") {
  CHECK_THROWS_AS(ssim(Frame::filled(10, 20, 0), Frame::filled(10, 20, 0)), std::invalid_argument);
  CHECK_THROWS_AS(ssim(Frame::filled(12, 12, 0), Frame::filled(12, 13, 0)), DimensionMismatch);
}

TEST_CASE("ssim: sliding implementation matches the per-window oracle") {
  vqa::test::for_all(25, 77, [](vqa::test::Gen& g) {
    const int w = g.int_in(11, 24), h = g.int_in(11, 24);
    Frame a = g.frame(w, h);
    Frame b = g.int_in(0, 1) ? g.frame(w, h) : g.ramp_noise(w, h, 20);
    const auto ref = vqa::test::naive_ssim_map(a, b);
    const Plane m = ssim_map(a, b);
    REQUIRE(m.data.size() == ref.size());
    double worst = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) worst = std::max(worst, std::abs(m.data[i] - ref[i]));
    CHECK(worst < 1e-9);
  });
}

TEST_CASE("psnr and ssim order with noise strength") {
  Frame f = synth::natural_scene(96, 96, 4);
  double last_psnr = INFINITY, last_ssim = INFINITY;
  for (double sigma : {2.0, 5.0, 10.0, 20.0}) {
    Rng rng(100);
    Frame noisy = awgn(f, sigma, rng);
    const double p = psnr(f, noisy), s = ssim(f, noisy);
    CHECK(p < last_psnr);
    CHECK(s < last_ssim);
    last_psnr = p;
    last_ssim = s;
  }
}

TEST_CASE("mse symmetry property") {
  vqa::test::for_all(100, 8, [](vqa::test::Gen& g) {
    const int w = g.int_in(1, 30), h = g.int_in(1, 30);
    Frame a = g.frame(w, h), b = g.frame(w, h);
    CHECK(mse(a, b) == mse(b, a));
    CHECK(psnr(a, b) == psnr(b, a));
  });
}

TEST_CASE("filters: kernel normalization and flat-field invariance") {
  for (int size : {3, 7, 11}) {
    auto k = gaussian_kernel(size, size / 6.0);
    CHECK(std::accumulate(k.begin(), k.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  Plane flat(20, 15, 42.0);
  for (double v : filter_valid(flat, gaussian_kernel(7, 7.0 / 6)).data) CHECK(v == doctest::Approx(42.0));
  Plane r = filter_replicate(flat, gaussian_kernel(5, 1.0));
  CHECK(r.width == 20);
  for (double v : r.data) CHECK(v == doctest::Approx(42.0));
}
