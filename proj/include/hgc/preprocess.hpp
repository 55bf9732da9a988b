#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hgc/blockmat.hpp"
#include "hgc/dataset.hpp"

namespace hgc {

/// Per-feature mean and sample standard deviation of the training data.
struct FeatureStats {
  std::vector<double> mean;
  std::vector<double> stddev;

  std::size_t size() const { return mean.size(); }
  bool operator==(const FeatureStats&) const = default;
};

/// Uniform tiling of the reals: interval t covers ((t-1)*length + origin, t*length + origin].
struct PartitionParams {
  double length = 1.0;
  double origin = 0.0;

  bool operator==(const PartitionParams&) const = default;
};

/// Integer interval index per unit and feature, plus the observed range.
struct DiscretizedDataset {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<int> values;  // row-major n x m
  int t_min = 0;
  int t_max = 0;

  int tau() const { return t_max - t_min + 1; }
  int at(std::size_t i, std::size_t j) const { return values[i * m + j]; }
  std::span<const int> unit(std::size_t i) const { return {values.data() + i * m, m}; }
};

/// Column means and n-1 standard deviations. Needs at least two units.
FeatureStats fit_stats(const RawDataset& raw);

/// (f - mean) / stddev per entry; a constant feature (stddev 0) maps to 0.
DenseMatrix zscore(const RawDataset& raw, const FeatureStats& stats);

/// ceil((z - origin) / length).
int discretize_value(double z, const PartitionParams& params);

DiscretizedDataset discretize(const DenseMatrix& z, const PartitionParams& params);

/// Normalizes one raw unit with training statistics, then discretizes it.
/// Entries may fall outside the training [t_min, t_max].
std::vector<int> discretize_unit(std::span<const double> raw_unit, const FeatureStats& stats,
                                 const PartitionParams& params);

}  // namespace hgc
