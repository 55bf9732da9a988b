#include "hgc/synth.hpp"

#include <cmath>
#include <string>

#include "hgc/errors.hpp"
#include "hgc/random.hpp"

namespace hgc {
namespace {

// 1 + |N(0, 0.25)|: bounded away from zero so the sign is never ambiguous.
double signal_magnitude(Rng& rng) { return 1.0 + 0.5 * std::abs(standard_normal(rng)); }

}  // namespace

RawDataset gaussian_mixture(std::size_t classes, std::size_t features, std::size_t n_per_class,
                            double separation, std::uint64_t seed) {
  if (classes < 1 || features < 1 || n_per_class < 1) {
    throw ArgumentError("mixture counts must be at least 1");
  }
  if (!std::isfinite(separation)) throw ArgumentError("separation must be finite");
  Rng rng(seed);
  RawDataset raw;
  raw.n = classes * n_per_class;
  raw.m = features;
  for (std::size_t j = 0; j < features; ++j) raw.feature_names.push_back("f" + std::to_string(j + 1));
  for (std::size_t k = 0; k < classes; ++k) raw.label_names.push_back("class" + std::to_string(k + 1));
  raw.values.reserve(raw.n * raw.m);
  for (std::size_t k = 0; k < classes; ++k) {
    const double mean = separation * static_cast<double>(k);
    for (std::size_t i = 0; i < n_per_class; ++i) {
      for (std::size_t j = 0; j < features; ++j) raw.values.push_back(mean + standard_normal(rng));
      raw.labels.push_back(static_cast<int>(k));
    }
  }
  return raw;
}

RawDataset interaction_only(std::size_t n_per_class, std::size_t noise_features,
                            std::uint64_t seed) {
  if (n_per_class < 1) throw ArgumentError("interaction dataset needs at least 1 unit per class");
  Rng rng(seed);
  RawDataset raw;
  raw.n = 2 * n_per_class;
  raw.m = 2 + noise_features;
  raw.feature_names = {"signal1", "signal2"};
  for (std::size_t j = 0; j < noise_features; ++j) {
    raw.feature_names.push_back("noise" + std::to_string(j + 1));
  }
  raw.label_names = {"concordant", "discordant"};
  raw.values.reserve(raw.n * raw.m);
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < n_per_class; ++i) {
      // alternating signs keep each class's marginal balanced about zero
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      const double first = sign * signal_magnitude(rng);
      const double second = (k == 0 ? sign : -sign) * signal_magnitude(rng);
      raw.values.push_back(first);
      raw.values.push_back(second);
      for (std::size_t j = 0; j < noise_features; ++j) raw.values.push_back(standard_normal(rng));
      raw.labels.push_back(k);
    }
  }
  return raw;
}

}  // namespace hgc
