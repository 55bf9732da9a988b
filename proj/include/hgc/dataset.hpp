#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hgc {

/// Units x features measurement table with class labels.
///
/// Class indices are 0-based here; label_names[k] names class k. Feature
/// values are row-major, one row per unit.
struct RawDataset {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> values;
  std::vector<std::string> feature_names;
  std::vector<std::string> label_names;
  std::vector<int> labels;

  std::size_t class_count() const { return label_names.size(); }
  std::span<const double> unit(std::size_t i) const { return {values.data() + i * m, m}; }
  double at(std::size_t i, std::size_t j) const { return values[i * m + j]; }

  /// Throws DataError or ArgumentError if shapes, labels or values are inconsistent.
  void validate() const;

  /// Rows `units`, in the given order.
  RawDataset subset(std::span<const std::size_t> units) const;
  /// Columns `features` (0-based), in the given order.
  RawDataset select_features(std::span<const std::size_t> features) const;

  bool operator==(const RawDataset&) const = default;
};

/// Disjoint class sets Q_k covering every unit, stored as a label per unit.
class LabeledPartition {
 public:
  /// Throws ArgumentError when a label is out of range or a class is empty.
  LabeledPartition(std::vector<int> labels, std::size_t class_count);
  static LabeledPartition from_dataset(const RawDataset& raw);

  std::size_t class_count() const { return sizes_.size(); }
  std::size_t unit_count() const { return labels_.size(); }
  int label(std::size_t unit) const { return labels_[unit]; }
  const std::vector<int>& labels() const { return labels_; }
  /// |Q_k| for every class.
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  /// Unit indices of class k, ascending.
  std::vector<std::size_t> members(int k) const;

 private:
  std::vector<int> labels_;
  std::vector<std::size_t> sizes_;
};

}  // namespace hgc
