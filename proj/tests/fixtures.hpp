#pragma once

// Small trained models shared by the harness and CLI tests.

#include <vector>

#include "vqa/harness.hpp"
#include "vqa/synth.hpp"

namespace vqa::test {

inline std::vector<Frame> pristine_stills(int n, int w, int h, std::uint64_t seed0) {
  std::vector<Frame> out;
  for (int i = 0; i < n; ++i) out.push_back(synth::natural_scene(w, h, seed0 + static_cast<std::uint64_t>(i)));
  return out;
}

inline const NrModels& small_models() {
  static const NrModels models = [] {
    const auto niqe_corpus = pristine_stills(32, 288, 192, 7000);
    const auto brisque_corpus = pristine_stills(6, 160, 120, 8000);
    static constexpr int kQ[] = {10, 20, 30, 40, 50, 60, 70, 80, 90};
    return NrModels{niqe_fit(niqe_corpus), train_brisque(auto_label(brisque_corpus, kQ))};
  }();
  return models;
}

}  // namespace vqa::test
