#include <doctest.h>

#include <cmath>
#include <vector>

#include "hgc/synth.hpp"

namespace {

double column_mean(const hgc::RawDataset& raw, std::size_t j, int cls) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < raw.n; ++i) {
    if (cls >= 0 && raw.labels[i] != cls) continue;
    sum += raw.at(i, j);
    ++count;
  }
  return sum / static_cast<double>(count);
}

}  // namespace

TEST_CASE("gaussian mixture shape and determinism") {
  const auto raw = hgc::gaussian_mixture(7, 16, 135, 0.0, 3);
  CHECK(raw.n == 945);
  CHECK(raw.m == 16);
  CHECK(raw.class_count() == 7);
  CHECK(hgc::gaussian_mixture(7, 16, 135, 0.0, 3) == raw);
  CHECK(hgc::gaussian_mixture(7, 16, 135, 0.0, 4) != raw);
  raw.validate();
}

TEST_CASE("gaussian class means follow the separation") {
  const auto raw = hgc::gaussian_mixture(3, 2, 2000, 2.0, 5);
  for (int k = 0; k < 3; ++k) {
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::fabs(column_mean(raw, j, k) - 2.0 * k) < 0.1);
  }
}

TEST_CASE("interaction data hides the signal from single features") {
  const auto raw = hgc::interaction_only(2000, 2, 7);
  CHECK(raw.m == 4);
  CHECK(raw.n == 4000);
  CHECK(raw.label_names == std::vector<std::string>{"concordant", "discordant"});
  CHECK(hgc::interaction_only(2000, 2, 7) == raw);
  for (std::size_t j = 0; j < raw.m; ++j) {
    CHECK(std::fabs(column_mean(raw, j, 0) - column_mean(raw, j, 1)) < 0.1);
    CHECK(std::fabs(column_mean(raw, j, -1)) < 0.1);
  }
  // Sign agreement alone identifies the class.
  for (std::size_t i = 0; i < raw.n; ++i) {
    const bool same = (raw.at(i, 0) > 0) == (raw.at(i, 1) > 0);
    CHECK(raw.labels[i] == (same ? 0 : 1));
  }
}
