#include "hgc/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hgc/errors.hpp"

namespace hgc {
namespace {

void check_params(const PartitionParams& params) {
  if (!(params.length > 0.0) || !std::isfinite(params.length) || !std::isfinite(params.origin)) {
    throw ArgumentError("partition length must be finite and positive");
  }
}

double standardize(double f, double mean, double sd) { return sd > 0.0 ? (f - mean) / sd : 0.0; }

}  // namespace

FeatureStats fit_stats(const RawDataset& raw) {
  if (raw.n < 2) {
    throw ArgumentError("feature statistics need at least 2 units, got " + std::to_string(raw.n));
  }
  FeatureStats stats{std::vector<double>(raw.m, 0.0), std::vector<double>(raw.m, 0.0)};
  for (std::size_t j = 0; j < raw.m; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < raw.n; ++i) {
      const double f = raw.at(i, j);
      if (!std::isfinite(f)) {
        throw DataError("non-finite value at unit " + std::to_string(i + 1) + ", feature " +
                        std::to_string(j + 1));
      }
      sum += f;
    }
    const double mean = sum / static_cast<double>(raw.n);
    double ss = 0.0;
    for (std::size_t i = 0; i < raw.n; ++i) {
      const double d = raw.at(i, j) - mean;
      ss += d * d;
    }
    stats.mean[j] = mean;
    stats.stddev[j] = std::sqrt(ss / static_cast<double>(raw.n - 1));
  }
  return stats;
}

DenseMatrix zscore(const RawDataset& raw, const FeatureStats& stats) {
  if (stats.mean.size() != raw.m || stats.stddev.size() != raw.m) {
    throw DimensionError("feature statistics cover " + std::to_string(stats.mean.size()) +
                         " features, dataset has " + std::to_string(raw.m));
  }
  DenseMatrix z(raw.n, raw.m);
  for (std::size_t i = 0; i < raw.n; ++i) {
    for (std::size_t j = 0; j < raw.m; ++j) {
      z(i, j) = standardize(raw.at(i, j), stats.mean[j], stats.stddev[j]);
    }
  }
  return z;
}

int discretize_value(double z, const PartitionParams& params) {
  if (!std::isfinite(z)) throw DataError("cannot discretize a non-finite score");
  const double t = std::ceil((z - params.origin) / params.length);
  constexpr double lo = std::numeric_limits<int>::min() / 2;
  constexpr double hi = std::numeric_limits<int>::max() / 2;
  if (t < lo || t > hi) throw DataError("discretized score out of integer range");
  return static_cast<int>(t);
}

DiscretizedDataset discretize(const DenseMatrix& z, const PartitionParams& params) {
  check_params(params);
  DiscretizedDataset out;
  out.n = z.rows();
  out.m = z.cols();
  out.values.reserve(z.rows() * z.cols());
  for (double v : z.entries()) out.values.push_back(discretize_value(v, params));
  if (!out.values.empty()) {
    const auto [lo, hi] = std::minmax_element(out.values.begin(), out.values.end());
    out.t_min = *lo;
    out.t_max = *hi;
  }
  return out;
}

std::vector<int> discretize_unit(std::span<const double> raw_unit, const FeatureStats& stats,
                                 const PartitionParams& params) {
  check_params(params);
  if (raw_unit.size() != stats.mean.size()) {
    throw DimensionError("unit has " + std::to_string(raw_unit.size()) +
                         " features, model expects " + std::to_string(stats.mean.size()));
  }
  std::vector<int> out(raw_unit.size());
  for (std::size_t j = 0; j < raw_unit.size(); ++j) {
    out[j] = discretize_value(standardize(raw_unit[j], stats.mean[j], stats.stddev[j]), params);
  }
  return out;
}

}  // namespace hgc
