#pragma once

// A single hypergraph model of order eta.
//
// Hyperedges are intersections of eta (feature, interval) cells over distinct
// features. Only hyperedges that contain at least one training unit are
// stored; every other hyperedge has the uniform class distribution.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hgc/blockmat.hpp"
#include "hgc/dataset.hpp"
#include "hgc/preprocess.hpp"

namespace hgc {

/// Features are 0-based and strictly increasing; intervals[i] is the t value
/// for features[i].
struct HyperedgeKey {
  std::vector<int> features;
  std::vector<int> intervals;

  auto operator<=>(const HyperedgeKey&) const = default;
  bool operator==(const HyperedgeKey&) const = default;
};

/// Ordered sparse hyperedge -> class distribution map.
using WeightMap = std::map<HyperedgeKey, std::vector<double>>;

/// n x tau*m binary incidence matrix, one block of width tau per feature.
/// Unit i sits in column tau*j + (d_ij - t_min) of block j.
BlockMatrix build_incidence_dense(const DiscretizedDataset& d);

/// Incidence matrix of the eta-intersection hypergraph, i.e. B^[eta].
BlockMatrix eta_incidence_dense(const BlockMatrix& b, std::size_t eta);

/// Class proportions per hyperedge, each row normalized to sum to one.
///
/// keys_per_unit[i] lists the hyperedges unit i is incident with. Every key
/// that appears for any unit gets a row; no row is all-zero.
WeightMap build_weights(const std::vector<std::vector<HyperedgeKey>>& keys_per_unit,
                        const LabeledPartition& labels);

class HypergraphModel {
 public:
  HypergraphModel() = default;

  /// Rebuilds a model from exported weights, re-validating every invariant.
  /// Throws DataError when a row is malformed or does not sum to one.
  static HypergraphModel from_weights(int eta, PartitionParams params, FeatureStats stats,
                                      int t_min, int t_max, std::vector<std::size_t> class_sizes,
                                      const WeightMap& weights);

  int eta() const { return eta_; }
  const PartitionParams& params() const { return params_; }
  const FeatureStats& stats() const { return stats_; }
  std::size_t feature_count() const { return stats_.size(); }
  int t_min() const { return t_min_; }
  int t_max() const { return t_max_; }
  int tau() const { return t_max_ - t_min_ + 1; }
  std::size_t class_count() const { return class_sizes_.size(); }
  const std::vector<std::size_t>& class_sizes() const { return class_sizes_; }

  std::size_t combination_count() const {
    return eta_ > 0 ? combos_.size() / static_cast<std::size_t>(eta_) : 0;
  }
  /// Features of the q-th combination in lexicographic order.
  std::span<const int> combination(std::size_t q) const {
    return {combos_.data() + q * static_cast<std::size_t>(eta_), static_cast<std::size_t>(eta_)};
  }

  /// Mixed-radix cell code of an interval tuple, nullopt if any t lies
  /// outside [t_min, t_max].
  std::optional<std::uint64_t> encode(std::span<const int> intervals) const;
  /// Stored row for (combination, code), empty when the hyperedge is empty.
  std::span<const double> row(std::size_t combination, std::uint64_t code) const;
  /// Row for a key; the uniform row when the key was never observed.
  std::vector<double> weight_row(const HyperedgeKey& key) const;

  std::size_t stored_rows() const { return codes_.size(); }
  /// Row count of the full dense weight array: C(m, eta) * tau^eta.
  double dense_row_count() const;
  WeightMap weights() const;

  bool operator==(const HypergraphModel&) const = default;

 private:
  friend HypergraphModel train_model(const DenseMatrix&, const FeatureStats&,
                                     const LabeledPartition&, const PartitionParams&, int);

  void init_layout(int eta, std::size_t m);

  int eta_ = 0;
  PartitionParams params_;
  FeatureStats stats_;
  int t_min_ = 0;
  int t_max_ = 0;
  std::vector<std::size_t> class_sizes_;
  std::vector<int> combos_;               // combination_count x eta, flattened
  std::vector<std::size_t> combo_begin_;  // offsets into codes_, one past per combination
  std::vector<std::uint64_t> codes_;      // sorted within each combination
  std::vector<double> rows_;              // codes_.size() x class_count
};

/// Fits statistics on raw, discretizes under params and builds the model.
HypergraphModel train_model(const RawDataset& raw, const LabeledPartition& labels,
                            const PartitionParams& params, int eta);

/// Same, from z-scores already computed with `stats`.
HypergraphModel train_model(const DenseMatrix& z, const FeatureStats& stats,
                            const LabeledPartition& labels, const PartitionParams& params,
                            int eta);

}  // namespace hgc
