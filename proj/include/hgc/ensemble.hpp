#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgc/model.hpp"
#include "hgc/parallel.hpp"
#include "hgc/predict.hpp"

namespace hgc {

/// Sampling law for the model population. lengths x origins models are
/// trained, one per (length, origin) pair.
struct EnsembleConfig {
  int lengths = 200;
  int origins = 10;
  int eta = 1;
  double length_min = 0.2;
  double length_max = 1.5;
  double origin_min = -0.5;
  double origin_max = 0.5;
  std::uint64_t seed = 0;

  std::size_t population() const {
    return static_cast<std::size_t>(lengths) * static_cast<std::size_t>(origins);
  }
  /// Throws ArgumentError on non-positive counts, empty bounds or length_min <= 0.
  void validate() const;

  bool operator==(const EnsembleConfig&) const = default;
};

struct EnsembleModel {
  EnsembleConfig config;
  std::vector<std::string> feature_names;
  std::vector<std::string> label_names;
  std::vector<HypergraphModel> models;

  std::size_t class_count() const { return label_names.size(); }
  std::size_t feature_count() const { return feature_names.size(); }

  bool operator==(const EnsembleModel&) const = default;
};

/// Per-model votes and mean tuples for one unit.
struct PredictionRecord {
  std::vector<int> votes;
  std::vector<MeanTuple> mean_tuples;

  bool operator==(const PredictionRecord&) const = default;
};

/// Draws `lengths` interval lengths, then `origins` origins, and returns their
/// Cartesian product, length-major.
std::vector<PartitionParams> sample_params(const EnsembleConfig& config);

EnsembleModel train_population(const RawDataset& raw, const LabeledPartition& labels,
                               const EnsembleConfig& config,
                               unsigned threads = default_parallelism());

PredictionRecord predict_record(std::span<const double> unit, const EnsembleModel& ensemble);

/// predict_record for every unit of `units`, in order.
std::vector<PredictionRecord> predict_records(const RawDataset& units,
                                              const EnsembleModel& ensemble,
                                              unsigned threads = default_parallelism());

/// Modal vote; ties go to the lowest class index. Throws ArgumentError when empty.
int final_prediction(std::span<const int> votes);
inline int final_prediction(const PredictionRecord& rec) { return final_prediction(rec.votes); }

/// Modal class when its vote fraction is strictly above `threshold`,
/// otherwise nullopt (unclassified).
std::optional<int> thresholded_prediction(std::span<const int> votes, double threshold = 0.75);
inline std::optional<int> thresholded_prediction(const PredictionRecord& rec,
                                                 double threshold = 0.75) {
  return thresholded_prediction(rec.votes, threshold);
}

/// Vote share of the modal class.
double modal_fraction(std::span<const int> votes);

}  // namespace hgc
