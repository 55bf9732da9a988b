#include "hgc/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hgc/errors.hpp"
#include "hgc/random.hpp"

namespace hgc {
namespace {

struct Mode {
  int cls = 0;
  std::size_t count = 0;
};

Mode mode_of(std::span<const int> votes) {
  if (votes.empty()) throw ArgumentError("no votes to aggregate");
  const int top = *std::max_element(votes.begin(), votes.end());
  if (*std::min_element(votes.begin(), votes.end()) < 0) {
    throw ArgumentError("negative class index in votes");
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(top) + 1, 0);
  for (int v : votes) ++counts[static_cast<std::size_t>(v)];
  Mode best;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > best.count) best = {static_cast<int>(k), counts[k]};
  }
  return best;
}

}  // namespace

void EnsembleConfig::validate() const {
  if (lengths < 1 || origins < 1) {
    throw ArgumentError("ensemble needs at least one length and one origin");
  }
  if (eta < 1) throw ArgumentError("order must be at least 1");
  if (!(length_min > 0.0)) throw ArgumentError("interval length lower bound must be positive");
  if (!(length_min <= length_max) || !(origin_min <= origin_max) || !std::isfinite(length_max) ||
      !std::isfinite(origin_min) || !std::isfinite(origin_max)) {
    throw ArgumentError("sampling bounds are empty or non-finite");
  }
}

std::vector<PartitionParams> sample_params(const EnsembleConfig& config) {
  config.validate();
  Rng rng(config.seed);
  std::vector<double> lengths(static_cast<std::size_t>(config.lengths));
  std::vector<double> origins(static_cast<std::size_t>(config.origins));
  for (double& l : lengths) l = uniform(rng, config.length_min, config.length_max);
  for (double& a : origins) a = uniform(rng, config.origin_min, config.origin_max);
  std::vector<PartitionParams> out;
  out.reserve(config.population());
  for (double l : lengths) {
    for (double a : origins) out.push_back({l, a});
  }
  return out;
}

EnsembleModel train_population(const RawDataset& raw, const LabeledPartition& labels,
                               const EnsembleConfig& config, unsigned threads) {
  const auto params = sample_params(config);
  if (static_cast<std::size_t>(config.eta) > raw.m) {
    throw ArgumentError("order " + std::to_string(config.eta) + " exceeds feature count " +
                        std::to_string(raw.m));
  }
  const FeatureStats stats = fit_stats(raw);
  const DenseMatrix z = zscore(raw, stats);

  EnsembleModel ens;
  ens.config = config;
  ens.feature_names = raw.feature_names;
  ens.label_names = raw.label_names;
  ens.models.resize(params.size());
  parallel_for(params.size(), threads, [&](std::size_t i) {
    ens.models[i] = train_model(z, stats, labels, params[i], config.eta);
  });
  return ens;
}

PredictionRecord predict_record(std::span<const double> unit, const EnsembleModel& ensemble) {
  if (unit.size() != ensemble.feature_count()) {
    throw DimensionError("unit has " + std::to_string(unit.size()) +
                         " features, ensemble expects " +
                         std::to_string(ensemble.feature_count()));
  }
  PredictionRecord rec;
  rec.votes.reserve(ensemble.models.size());
  rec.mean_tuples.reserve(ensemble.models.size());
  for (const auto& model : ensemble.models) {
    rec.mean_tuples.push_back(raw_mean_tuple(unit, model));
    rec.votes.push_back(predict_class(rec.mean_tuples.back()));
  }
  return rec;
}

std::vector<PredictionRecord> predict_records(const RawDataset& units,
                                              const EnsembleModel& ensemble, unsigned threads) {
  std::vector<PredictionRecord> out(units.n);
  parallel_for(units.n, threads,
               [&](std::size_t i) { out[i] = predict_record(units.unit(i), ensemble); });
  return out;
}

int final_prediction(std::span<const int> votes) { return mode_of(votes).cls; }

std::optional<int> thresholded_prediction(std::span<const int> votes, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ArgumentError("decision threshold must lie in [0, 1]");
  }
  const Mode m = mode_of(votes);
  const double fraction = static_cast<double>(m.count) / static_cast<double>(votes.size());
  if (fraction > threshold) return m.cls;
  return std::nullopt;
}

double modal_fraction(std::span<const int> votes) {
  const Mode m = mode_of(votes);
  return static_cast<double>(m.count) / static_cast<double>(votes.size());
}

}  // namespace hgc
