#pragma once

// Stratified k-fold evaluation of hypergraph ensembles.
//
// One cross-validation run trains a population per fold and keeps every
// held-out unit's PredictionRecord, so threshold, population-size and
// rule-out sweeps are computed from the same trained models.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hgc/dataset.hpp"
#include "hgc/ensemble.hpp"
#include "hgc/ruleout.hpp"

namespace hgc {

struct FoldSpec {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;  // unit -> fold

  /// Units of fold f, ascending.
  std::vector<std::size_t> units(std::size_t fold) const;
  /// Every unit not in fold f, ascending.
  std::vector<std::size_t> complement(std::size_t fold) const;
};

/// Shuffles each class under `seed` and deals its units round-robin onto the
/// folds. Throws ArgumentError if k < 2 or some class has fewer than k units.
FoldSpec stratified_kfold(const LabeledPartition& labels, std::size_t k, std::uint64_t seed);

struct ClassRates {
  double tpr = 0.0;
  double fnr = 0.0;
  double fpr = 0.0;
  double tnr = 0.0;
};

struct EvalReport {
  std::size_t models = 0;
  std::optional<double> threshold;
  double accuracy = 0.0;  // mean over folds of accuracy on classified units
  double standard_error = 0.0;
  std::vector<double> fold_accuracies;
  std::vector<std::size_t> fold_units;
  std::vector<std::size_t> fold_classified;
  /// confusion[output][true], classified units pooled over folds.
  std::vector<std::vector<std::size_t>> confusion;
  std::vector<ClassRates> rates;
  std::size_t classified = 0;
  std::size_t total = 0;
  double classified_fraction = 0.0;
  std::vector<std::size_t> dropped_features;
};

/// Held-out predictions of every fold.
struct CrossValidationRun {
  FoldSpec folds;
  std::size_t class_count = 0;
  std::size_t models = 0;
  std::vector<std::vector<std::size_t>> held_out;         // per fold: unit indices
  std::vector<std::vector<PredictionRecord>> records;     // per fold: one per held-out unit
  std::vector<int> truth;                                 // per unit
};

CrossValidationRun run_folds(const RawDataset& raw, const LabeledPartition& labels,
                             const EnsembleConfig& config, std::size_t k, std::uint64_t seed,
                             unsigned threads = default_parallelism());

/// Report over the first `models` votes of every record (all when nullopt).
EvalReport summarize(const CrossValidationRun& run, std::optional<double> threshold,
                     std::optional<std::size_t> models = std::nullopt);

/// Per-class rates from a confusion matrix in [output][true] orientation.
std::vector<ClassRates> class_rates(const std::vector<std::vector<std::size_t>>& confusion);

EvalReport cross_validate(const RawDataset& raw, const LabeledPartition& labels,
                          const EnsembleConfig& config, std::size_t k, std::uint64_t seed,
                          std::optional<double> threshold = std::nullopt,
                          unsigned threads = default_parallelism());

/// Reports for model-list prefixes of the given sizes. Throws ArgumentError
/// if a size is zero or exceeds the population.
std::vector<EvalReport> population_sweep(const RawDataset& raw, const LabeledPartition& labels,
                                         const EnsembleConfig& config,
                                         const std::vector<std::size_t>& sizes, std::size_t k,
                                         std::uint64_t seed,
                                         unsigned threads = default_parallelism());

std::vector<EvalReport> threshold_sweep(const RawDataset& raw, const LabeledPartition& labels,
                                        const EnsembleConfig& config,
                                        const std::vector<double>& thresholds, std::size_t k,
                                        std::uint64_t seed,
                                        unsigned threads = default_parallelism());

/// Cross-validation with the `dropped` features (0-based) removed. Throws
/// ArgumentError if fewer than eta features remain.
EvalReport ablation_run(const RawDataset& raw, const LabeledPartition& labels,
                        const EnsembleConfig& config, const std::vector<std::size_t>& dropped,
                        std::size_t k, std::uint64_t seed,
                        std::optional<double> threshold = std::nullopt,
                        unsigned threads = default_parallelism());

/// Features of {0..m-1} not in `keep`, ascending.
std::vector<std::size_t> complement_features(const std::vector<std::size_t>& keep, std::size_t m);

struct RuleOutPoint {
  RuleOutTechnique technique = RuleOutTechnique::Prediction;
  double threshold = 0.0;
  double hit_rate = 0.0;  // mean over folds of the fraction with the true class kept
  double mean_ruled_out = 0.0;
  std::vector<double> fold_hit_rates;
};

std::vector<RuleOutPoint> ruleout_points(const CrossValidationRun& run,
                                         RuleOutTechnique technique,
                                         const std::vector<double>& thresholds);

std::vector<RuleOutPoint> ruleout_sweep(const RawDataset& raw, const LabeledPartition& labels,
                                        const EnsembleConfig& config, RuleOutTechnique technique,
                                        const std::vector<double>& thresholds, std::size_t k,
                                        std::uint64_t seed,
                                        unsigned threads = default_parallelism());

}  // namespace hgc
