#include "hgc/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hgc/combinatorics.hpp"
#include "hgc/errors.hpp"

namespace hgc {
namespace {

constexpr double kRowSumTolerance = 1e-9;

void normalize_row(std::span<double> row) {
  double total = 0.0;
  for (double w : row) total += w;
  // total > 0 for every observed hyperedge
  for (double& w : row) w /= total;
}

void check_eta(int eta, std::size_t m) {
  if (eta < 1 || static_cast<std::size_t>(eta) > m) {
    throw ArgumentError("order " + std::to_string(eta) + " outside [1, " + std::to_string(m) +
                        "]");
  }
}

}  // namespace

BlockMatrix build_incidence_dense(const DiscretizedDataset& d) {
  const auto tau = static_cast<std::size_t>(d.tau());
  DenseMatrix b(d.n, tau * d.m);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.m; ++j) {
      const int t = d.at(i, j);
      if (t < d.t_min || t > d.t_max) throw DataError("discretized entry outside [t_min, t_max]");
      b(i, tau * j + static_cast<std::size_t>(t - d.t_min)) = 1.0;
    }
  }
  return BlockMatrix(std::move(b), std::vector<std::size_t>(d.m, tau));
}

BlockMatrix eta_incidence_dense(const BlockMatrix& b, std::size_t eta) {
  return restricted_face_power(b, eta);
}

WeightMap build_weights(const std::vector<std::vector<HyperedgeKey>>& keys_per_unit,
                        const LabeledPartition& labels) {
  if (keys_per_unit.size() != labels.unit_count()) {
    throw DimensionError("key lists given for " + std::to_string(keys_per_unit.size()) +
                         " units, partition has " + std::to_string(labels.unit_count()));
  }
  const std::size_t c = labels.class_count();
  WeightMap counts;
  for (std::size_t i = 0; i < keys_per_unit.size(); ++i) {
    if (keys_per_unit[i].size() != keys_per_unit.front().size()) {
      throw ArgumentError("unit " + std::to_string(i + 1) + " has a different key count");
    }
    for (const auto& key : keys_per_unit[i]) {
      auto [it, inserted] = counts.try_emplace(key, c, 0.0);
      it->second[static_cast<std::size_t>(labels.label(i))] += 1.0;
    }
  }
  const auto& sizes = labels.sizes();
  for (auto& [key, row] : counts) {
    for (std::size_t k = 0; k < c; ++k) row[k] /= static_cast<double>(sizes[k]);
    normalize_row(row);
  }
  return counts;
}

void HypergraphModel::init_layout(int eta, std::size_t m) {
  check_eta(eta, m);
  eta_ = eta;
  // the cell code must fit a 64-bit integer
  const auto tau = static_cast<std::uint64_t>(t_max_ - t_min_ + 1);
  std::uint64_t cells = 1;
  for (int i = 0; i < eta; ++i) {
    if (cells > std::numeric_limits<std::uint64_t>::max() / tau) {
      throw ArgumentError("interval lattice tau^eta exceeds 64 bits (tau=" + std::to_string(tau) +
                          ", eta=" + std::to_string(eta) + ")");
    }
    cells *= tau;
  }
  combos_.clear();
  for (const auto& combo : combinations(static_cast<int>(m), eta)) {
    combos_.insert(combos_.end(), combo.begin(), combo.end());
  }
  combo_begin_.assign(1, 0);
  codes_.clear();
  rows_.clear();
}

std::optional<std::uint64_t> HypergraphModel::encode(std::span<const int> intervals) const {
  const auto radix = static_cast<std::uint64_t>(tau());
  std::uint64_t code = 0;
  for (int t : intervals) {
    if (t < t_min_ || t > t_max_) return std::nullopt;
    code = code * radix + static_cast<std::uint64_t>(t - t_min_);
  }
  return code;
}

std::span<const double> HypergraphModel::row(std::size_t combination, std::uint64_t code) const {
  const auto first = codes_.begin() + static_cast<std::ptrdiff_t>(combo_begin_[combination]);
  const auto last = codes_.begin() + static_cast<std::ptrdiff_t>(combo_begin_[combination + 1]);
  const auto it = std::lower_bound(first, last, code);
  if (it == last || *it != code) return {};
  const auto index = static_cast<std::size_t>(it - codes_.begin());
  return {rows_.data() + index * class_count(), class_count()};
}

std::vector<double> HypergraphModel::weight_row(const HyperedgeKey& key) const {
  std::vector<double> uniform(class_count(), 1.0 / static_cast<double>(class_count()));
  if (key.features.size() != static_cast<std::size_t>(eta_) ||
      key.intervals.size() != key.features.size()) {
    return uniform;
  }
  for (std::size_t q = 0; q < combination_count(); ++q) {
    const auto combo = combination(q);
    if (!std::equal(combo.begin(), combo.end(), key.features.begin())) continue;
    const auto code = encode(key.intervals);
    if (!code) return uniform;
    const auto r = row(q, *code);
    if (r.empty()) return uniform;
    return {r.begin(), r.end()};
  }
  return uniform;
}

double HypergraphModel::dense_row_count() const {
  return static_cast<double>(combination_count()) * std::pow(static_cast<double>(tau()), eta_);
}

WeightMap HypergraphModel::weights() const {
  WeightMap out;
  const auto radix = static_cast<std::uint64_t>(tau());
  const std::size_t c = class_count();
  for (std::size_t q = 0; q < combination_count(); ++q) {
    const auto combo = combination(q);
    for (std::size_t r = combo_begin_[q]; r < combo_begin_[q + 1]; ++r) {
      HyperedgeKey key{{combo.begin(), combo.end()}, std::vector<int>(combo.size())};
      std::uint64_t code = codes_[r];
      for (std::size_t i = combo.size(); i-- > 0;) {
        key.intervals[i] = t_min_ + static_cast<int>(code % radix);
        code /= radix;
      }
      out.emplace(std::move(key), std::vector<double>(rows_.begin() + static_cast<std::ptrdiff_t>(r * c),
                                                      rows_.begin() + static_cast<std::ptrdiff_t>((r + 1) * c)));
    }
  }
  return out;
}

HypergraphModel HypergraphModel::from_weights(int eta, PartitionParams params, FeatureStats stats,
                                              int t_min, int t_max,
                                              std::vector<std::size_t> class_sizes,
                                              const WeightMap& weights) {
  if (!(params.length > 0.0) || !std::isfinite(params.length) || !std::isfinite(params.origin)) {
    throw DataError("model partition length must be finite and positive");
  }
  if (stats.mean.size() != stats.stddev.size()) throw DataError("model statistics are ragged");
  for (std::size_t j = 0; j < stats.size(); ++j) {
    if (!std::isfinite(stats.mean[j]) || !(stats.stddev[j] >= 0.0) ||
        !std::isfinite(stats.stddev[j])) {
      throw DataError("model statistics invalid for feature " + std::to_string(j + 1));
    }
  }
  if (t_min > t_max) throw DataError("model interval range is empty");
  if (class_sizes.empty()) throw DataError("model has no classes");
  for (auto s : class_sizes) {
    if (s == 0) throw DataError("model has an empty class");
  }
  if (eta < 1 || static_cast<std::size_t>(eta) > stats.size()) {
    throw DataError("model order outside [1, feature count]");
  }

  HypergraphModel model;
  model.params_ = params;
  model.stats_ = std::move(stats);
  model.t_min_ = t_min;
  model.t_max_ = t_max;
  model.class_sizes_ = std::move(class_sizes);
  model.init_layout(eta, model.stats_.size());

  const std::size_t c = model.class_count();
  std::size_t q = 0;
  for (const auto& [key, row] : weights) {
    if (key.features.size() != static_cast<std::size_t>(eta) ||
        key.intervals.size() != key.features.size()) {
      throw DataError("weight key has wrong order");
    }
    while (q < model.combination_count()) {
      const auto combo = model.combination(q);
      if (std::equal(combo.begin(), combo.end(), key.features.begin())) break;
      model.combo_begin_.push_back(model.codes_.size());
      ++q;
    }
    if (q == model.combination_count()) throw DataError("weight key has invalid feature tuple");
    const auto code = model.encode(key.intervals);
    if (!code) throw DataError("weight key interval outside model range");
    if (row.size() != c) throw DataError("weight row has wrong class count");
    double total = 0.0;
    for (double w : row) {
      if (!(w >= 0.0) || !std::isfinite(w)) throw DataError("weight row has invalid entry");
      total += w;
    }
    if (std::abs(total - 1.0) > kRowSumTolerance) throw DataError("weight row does not sum to 1");
    model.codes_.push_back(*code);
    model.rows_.insert(model.rows_.end(), row.begin(), row.end());
  }
  while (q < model.combination_count()) {
    model.combo_begin_.push_back(model.codes_.size());
    ++q;
  }
  return model;
}

HypergraphModel train_model(const DenseMatrix& z, const FeatureStats& stats,
                            const LabeledPartition& labels, const PartitionParams& params,
                            int eta) {
  if (z.rows() != labels.unit_count()) {
    throw DimensionError("score matrix has " + std::to_string(z.rows()) +
                         " units, partition has " + std::to_string(labels.unit_count()));
  }
  if (z.cols() != stats.size()) throw DimensionError("statistics do not match feature count");
  if (z.rows() == 0) throw ArgumentError("cannot train on an empty dataset");
  const DiscretizedDataset d = discretize(z, params);

  HypergraphModel model;
  model.params_ = params;
  model.stats_ = stats;
  model.t_min_ = d.t_min;
  model.t_max_ = d.t_max;
  model.class_sizes_ = labels.sizes();
  model.init_layout(eta, d.m);

  const std::size_t c = model.class_count();
  const auto tau = static_cast<std::uint64_t>(d.tau());
  std::vector<std::pair<std::uint64_t, int>> cells(d.n);
  std::vector<double> row(c);
  for (std::size_t q = 0; q < model.combination_count(); ++q) {
    const auto combo = model.combination(q);
    for (std::size_t i = 0; i < d.n; ++i) {
      std::uint64_t code = 0;
      for (int j : combo) {
        code = code * tau + static_cast<std::uint64_t>(d.at(i, static_cast<std::size_t>(j)) - d.t_min);
      }
      cells[i] = {code, labels.label(i)};
    }
    std::sort(cells.begin(), cells.end());
    for (std::size_t first = 0; first < cells.size();) {
      std::size_t last = first;
      std::fill(row.begin(), row.end(), 0.0);
      while (last < cells.size() && cells[last].first == cells[first].first) {
        row[static_cast<std::size_t>(cells[last].second)] += 1.0;
        ++last;
      }
      for (std::size_t k = 0; k < c; ++k) row[k] /= static_cast<double>(model.class_sizes_[k]);
      normalize_row(row);
      model.codes_.push_back(cells[first].first);
      model.rows_.insert(model.rows_.end(), row.begin(), row.end());
      first = last;
    }
    model.combo_begin_.push_back(model.codes_.size());
  }
  return model;
}

HypergraphModel train_model(const RawDataset& raw, const LabeledPartition& labels,
                            const PartitionParams& params, int eta) {
  const FeatureStats stats = fit_stats(raw);
  return train_model(zscore(raw, stats), stats, labels, params, eta);
}

}  // namespace hgc
