#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hgc/model.hpp"

namespace hgc {

/// The C(m, eta) hyperedges one unit is incident with.
struct IncidenceKeys {
  std::vector<HyperedgeKey> keys;
  /// Keys with some interval outside the training [t_min, t_max].
  std::size_t out_of_range = 0;
};

/// Column means of diag(nu) * W, one entry per class.
struct MeanTuple {
  std::vector<double> values;

  bool operator==(const MeanTuple&) const = default;
};

/// One key per increasing feature combination of size eta, in lexicographic order.
IncidenceKeys incidence_keys(std::span<const int> unit, int eta, int t_min, int t_max);

/// Sum of the unit's weight rows divided by the dense row count
/// C(m, eta) * tau^eta. Empty and out-of-range hyperedges contribute 1/c.
MeanTuple mean_tuple(const IncidenceKeys& keys, const HypergraphModel& model);

/// Same as above straight from a discretized unit, without building keys.
MeanTuple mean_tuple(std::span<const int> unit, const HypergraphModel& model);

/// Argmax with ties going to the lowest class index.
int predict_class(const MeanTuple& mean);

/// Discretizes a raw unit with the model's statistics and partition, then
/// computes its mean tuple.
MeanTuple raw_mean_tuple(std::span<const double> raw_unit, const HypergraphModel& model);

}  // namespace hgc
