#pragma once

#include <cstddef>
#include <vector>

#include "hgc/ensemble.hpp"

namespace hgc {

/// Mass per class, summing to one.
struct FrequencyTuple {
  std::vector<double> values;
};

/// Smallest set of highest-mass classes whose cumulative mass reaches the threshold.
struct RuleOutResult {
  std::vector<int> kept;  // descending mass, ascending index on ties
  std::size_t ruled_out_count = 0;
  double threshold = 0.0;

  bool contains(int cls) const;
};

enum class RuleOutTechnique { Prediction, Distribution };

/// Share of the votes each class received.
FrequencyTuple vote_frequencies(const PredictionRecord& rec, std::size_t class_count);

/// Element-wise mean of the per-model mean tuples, renormalized to sum to one.
FrequencyTuple mean_distribution(const PredictionRecord& rec);

FrequencyTuple class_masses(const PredictionRecord& rec, std::size_t class_count,
                            RuleOutTechnique technique);

/// Sorts classes by descending mass and keeps the shortest prefix whose
/// cumulative mass is at least `threshold`. Throws ArgumentError unless
/// threshold is in (0, 1] and the masses sum to one.
RuleOutResult rule_out(const FrequencyTuple& freq, double threshold);

}  // namespace hgc
