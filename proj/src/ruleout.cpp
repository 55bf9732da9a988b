#include "hgc/ruleout.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hgc/errors.hpp"

namespace hgc {
namespace {

constexpr double kMassTolerance = 1e-9;

}  // namespace

bool RuleOutResult::contains(int cls) const {
  return std::find(kept.begin(), kept.end(), cls) != kept.end();
}

FrequencyTuple vote_frequencies(const PredictionRecord& rec, std::size_t class_count) {
  if (rec.votes.empty()) throw ArgumentError("no votes to count");
  std::vector<std::size_t> counts(class_count, 0);
  for (int v : rec.votes) {
    if (v < 0 || static_cast<std::size_t>(v) >= class_count) {
      throw ArgumentError("vote for class outside range");
    }
    ++counts[static_cast<std::size_t>(v)];
  }
  FrequencyTuple out{std::vector<double>(class_count)};
  const auto total = static_cast<double>(rec.votes.size());
  for (std::size_t k = 0; k < class_count; ++k) {
    out.values[k] = static_cast<double>(counts[k]) / total;
  }
  return out;
}

FrequencyTuple mean_distribution(const PredictionRecord& rec) {
  if (rec.mean_tuples.empty()) throw ArgumentError("no mean tuples to average");
  const std::size_t c = rec.mean_tuples.front().values.size();
  FrequencyTuple out{std::vector<double>(c, 0.0)};
  for (const auto& mt : rec.mean_tuples) {
    if (mt.values.size() != c) throw DimensionError("mean tuples have differing class counts");
    for (std::size_t k = 0; k < c; ++k) out.values[k] += mt.values[k];
  }
  const auto models = static_cast<double>(rec.mean_tuples.size());
  for (double& v : out.values) v /= models;
  const double total = std::accumulate(out.values.begin(), out.values.end(), 0.0);
  if (!(total > 0.0)) throw DataError("mean distribution has no mass");
  for (double& v : out.values) v /= total;
  return out;
}

FrequencyTuple class_masses(const PredictionRecord& rec, std::size_t class_count,
                            RuleOutTechnique technique) {
  return technique == RuleOutTechnique::Prediction ? vote_frequencies(rec, class_count)
                                                   : mean_distribution(rec);
}

RuleOutResult rule_out(const FrequencyTuple& freq, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ArgumentError("rule-out threshold must lie in (0, 1]");
  }
  if (freq.values.empty()) throw ArgumentError("rule-out needs at least one class");
  const double total = std::accumulate(freq.values.begin(), freq.values.end(), 0.0);
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw ArgumentError("class masses must sum to 1");
  }
  std::vector<int> order(freq.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return freq.values[static_cast<std::size_t>(a)] > freq.values[static_cast<std::size_t>(b)];
  });

  RuleOutResult result;
  result.threshold = threshold;
  double cumulative = 0.0;
  for (int k : order) {
    result.kept.push_back(k);
    cumulative += freq.values[static_cast<std::size_t>(k)];
    if (cumulative >= threshold - kMassTolerance) break;
  }
  result.ruled_out_count = freq.values.size() - result.kept.size();
  return result;
}

}  // namespace hgc
