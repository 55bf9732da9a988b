#include "hgc/dataset.hpp"

#include <cmath>

#include "hgc/errors.hpp"

namespace hgc {

void RawDataset::validate() const {
  if (values.size() != n * m) throw DimensionError("dataset values do not match n x m");
  if (feature_names.size() != m) throw DimensionError("feature name count does not match m");
  if (labels.size() != n) throw DimensionError("label count does not match n");
  if (label_names.empty()) throw DataError("dataset has no classes");
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= label_names.size()) {
      throw DataError("unit " + std::to_string(i + 1) + " has class index out of range");
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (!std::isfinite(at(i, j))) {
        throw DataError("non-finite value at unit " + std::to_string(i + 1) + ", feature " +
                        std::to_string(j + 1));
      }
    }
  }
}

RawDataset RawDataset::subset(std::span<const std::size_t> units) const {
  RawDataset out;
  out.n = units.size();
  out.m = m;
  out.feature_names = feature_names;
  out.label_names = label_names;
  out.values.reserve(units.size() * m);
  out.labels.reserve(units.size());
  for (auto i : units) {
    if (i >= n) throw ArgumentError("unit index out of range");
    const auto row = unit(i);
    out.values.insert(out.values.end(), row.begin(), row.end());
    out.labels.push_back(labels[i]);
  }
  return out;
}

RawDataset RawDataset::select_features(std::span<const std::size_t> features) const {
  RawDataset out;
  out.n = n;
  out.m = features.size();
  out.label_names = label_names;
  out.labels = labels;
  for (auto j : features) {
    if (j >= m) throw ArgumentError("feature index " + std::to_string(j + 1) + " out of range");
    out.feature_names.push_back(feature_names[j]);
  }
  out.values.reserve(n * features.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : features) out.values.push_back(at(i, j));
  }
  return out;
}

LabeledPartition::LabeledPartition(std::vector<int> labels, std::size_t class_count)
    : labels_(std::move(labels)), sizes_(class_count, 0) {
  if (class_count == 0) throw ArgumentError("partition needs at least one class");
  for (int l : labels_) {
    if (l < 0 || static_cast<std::size_t>(l) >= class_count) {
      throw ArgumentError("label " + std::to_string(l) + " outside class range");
    }
    ++sizes_[static_cast<std::size_t>(l)];
  }
  for (std::size_t k = 0; k < class_count; ++k) {
    if (sizes_[k] == 0) throw ArgumentError("class " + std::to_string(k + 1) + " is empty");
  }
}

LabeledPartition LabeledPartition::from_dataset(const RawDataset& raw) {
  return LabeledPartition(raw.labels, raw.class_count());
}

std::vector<std::size_t> LabeledPartition::members(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == k) out.push_back(i);
  }
  return out;
}

}  // namespace hgc
