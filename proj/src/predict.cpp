#include "hgc/predict.hpp"

#include <string>

#include "hgc/combinatorics.hpp"
#include "hgc/errors.hpp"

namespace hgc {

IncidenceKeys incidence_keys(std::span<const int> unit, int eta, int t_min, int t_max) {
  if (eta < 1 || static_cast<std::size_t>(eta) > unit.size()) {
    throw ArgumentError("order " + std::to_string(eta) + " outside [1, " +
                        std::to_string(unit.size()) + "]");
  }
  IncidenceKeys out;
  for (auto& combo : combinations(static_cast<int>(unit.size()), eta)) {
    HyperedgeKey key{std::move(combo), {}};
    key.intervals.reserve(key.features.size());
    bool outside = false;
    for (int j : key.features) {
      const int t = unit[static_cast<std::size_t>(j)];
      outside = outside || t < t_min || t > t_max;
      key.intervals.push_back(t);
    }
    if (outside) ++out.out_of_range;
    out.keys.push_back(std::move(key));
  }
  return out;
}

MeanTuple mean_tuple(const IncidenceKeys& keys, const HypergraphModel& model) {
  const std::size_t c = model.class_count();
  MeanTuple mean{std::vector<double>(c, 0.0)};
  for (const auto& key : keys.keys) {
    if (key.features.size() != static_cast<std::size_t>(model.eta())) {
      throw ArgumentError("key order " + std::to_string(key.features.size()) +
                          " does not match model order " + std::to_string(model.eta()));
    }
    const auto row = model.weight_row(key);
    for (std::size_t k = 0; k < c; ++k) mean.values[k] += row[k];
  }
  const double rows = model.dense_row_count();
  for (double& v : mean.values) v /= rows;
  return mean;
}

MeanTuple mean_tuple(std::span<const int> unit, const HypergraphModel& model) {
  if (unit.size() != model.feature_count()) {
    throw DimensionError("unit has " + std::to_string(unit.size()) +
                         " features, model expects " + std::to_string(model.feature_count()));
  }
  const std::size_t c = model.class_count();
  const double uniform = 1.0 / static_cast<double>(c);
  MeanTuple mean{std::vector<double>(c, 0.0)};
  std::vector<int> intervals(static_cast<std::size_t>(model.eta()));
  for (std::size_t q = 0; q < model.combination_count(); ++q) {
    const auto combo = model.combination(q);
    for (std::size_t i = 0; i < combo.size(); ++i) {
      intervals[i] = unit[static_cast<std::size_t>(combo[i])];
    }
    std::span<const double> row;
    if (const auto code = model.encode(intervals)) row = model.row(q, *code);
    if (row.empty()) {
      for (double& v : mean.values) v += uniform;
    } else {
      for (std::size_t k = 0; k < c; ++k) mean.values[k] += row[k];
    }
  }
  const double rows = model.dense_row_count();
  for (double& v : mean.values) v /= rows;
  return mean;
}

int predict_class(const MeanTuple& mean) {
  int best = 0;
  for (std::size_t k = 1; k < mean.values.size(); ++k) {
    if (mean.values[k] > mean.values[static_cast<std::size_t>(best)]) best = static_cast<int>(k);
  }
  return best;
}

MeanTuple raw_mean_tuple(std::span<const double> raw_unit, const HypergraphModel& model) {
  const auto unit = discretize_unit(raw_unit, model.stats(), model.params());
  return mean_tuple(unit, model);
}

}  // namespace hgc
