#include "hgc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hgc/errors.hpp"
#include "hgc/random.hpp"

namespace hgc {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MeanAndError {
  double mean = kNaN;
  double standard_error = kNaN;
};

// Folds with no classified units carry NaN and are left out.
MeanAndError fold_summary(const std::vector<double>& per_fold) {
  std::vector<double> valid;
  for (double a : per_fold) {
    if (!std::isnan(a)) valid.push_back(a);
  }
  MeanAndError out;
  if (valid.empty()) return out;
  double sum = 0.0;
  for (double a : valid) sum += a;
  out.mean = sum / static_cast<double>(valid.size());
  if (valid.size() < 2) return out;
  double ss = 0.0;
  for (double a : valid) ss += (a - out.mean) * (a - out.mean);
  const double sd = std::sqrt(ss / static_cast<double>(valid.size() - 1));
  out.standard_error = sd / std::sqrt(static_cast<double>(valid.size()));
  return out;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? kNaN : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::vector<std::size_t> FoldSpec::units(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldSpec::complement(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

FoldSpec stratified_kfold(const LabeledPartition& labels, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw ArgumentError("cross-validation needs at least 2 folds");
  FoldSpec spec;
  spec.k = k;
  spec.assignments.assign(labels.unit_count(), 0);
  Rng rng(seed);
  for (std::size_t c = 0; c < labels.class_count(); ++c) {
    auto members = labels.members(static_cast<int>(c));
    if (members.size() < k) {
      throw ArgumentError("class " + std::to_string(c + 1) + " has " +
                          std::to_string(members.size()) + " units, fewer than " +
                          std::to_string(k) + " folds");
    }
    shuffle(members, rng);
    for (std::size_t p = 0; p < members.size(); ++p) spec.assignments[members[p]] = p % k;
  }
  return spec;
}

CrossValidationRun run_folds(const RawDataset& raw, const LabeledPartition& labels,
                             const EnsembleConfig& config, std::size_t k, std::uint64_t seed,
                             unsigned threads) {
  config.validate();
  if (labels.unit_count() != raw.n) throw DimensionError("labels do not match dataset");
  CrossValidationRun run;
  run.folds = stratified_kfold(labels, k, seed);
  run.class_count = labels.class_count();
  run.models = config.population();
  run.truth = labels.labels();
  for (std::size_t f = 0; f < k; ++f) {
    const auto train_units = run.folds.complement(f);
    const auto test_units = run.folds.units(f);
    const RawDataset train = raw.subset(train_units);
    const LabeledPartition train_labels(train.labels, labels.class_count());
    const EnsembleModel ens = train_population(train, train_labels, config, threads);
    run.records.push_back(predict_records(raw.subset(test_units), ens, threads));
    run.held_out.push_back(test_units);
  }
  return run;
}

std::vector<ClassRates> class_rates(const std::vector<std::vector<std::size_t>>& confusion) {
  const std::size_t c = confusion.size();
  std::size_t total = 0;
  std::vector<std::size_t> row_sum(c, 0), col_sum(c, 0);
  for (std::size_t o = 0; o < c; ++o) {
    for (std::size_t t = 0; t < c; ++t) {
      row_sum[o] += confusion[o][t];
      col_sum[t] += confusion[o][t];
      total += confusion[o][t];
    }
  }
  std::vector<ClassRates> rates(c);
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t tp = confusion[k][k];
    const std::size_t fp = row_sum[k] - tp;
    const std::size_t fn = col_sum[k] - tp;
    const std::size_t tn = total - tp - fp - fn;
    rates[k] = {ratio(tp, tp + fn), ratio(fn, tp + fn), ratio(fp, fp + tn), ratio(tn, fp + tn)};
  }
  return rates;
}

EvalReport summarize(const CrossValidationRun& run, std::optional<double> threshold,
                     std::optional<std::size_t> models) {
  const std::size_t used = models.value_or(run.models);
  if (used == 0 || used > run.models) {
    throw ArgumentError("population size " + std::to_string(used) + " outside [1, " +
                        std::to_string(run.models) + "]");
  }
  const std::size_t c = run.class_count;
  EvalReport report;
  report.models = used;
  report.threshold = threshold;
  report.confusion.assign(c, std::vector<std::size_t>(c, 0));
  for (std::size_t f = 0; f < run.records.size(); ++f) {
    std::size_t classified = 0;
    std::size_t correct = 0;
    for (std::size_t u = 0; u < run.records[f].size(); ++u) {
      const std::span<const int> votes(run.records[f][u].votes.data(), used);
      const std::optional<int> out =
          threshold ? thresholded_prediction(votes, *threshold) : final_prediction(votes);
      if (!out) continue;
      const int truth = run.truth[run.held_out[f][u]];
      ++classified;
      if (*out == truth) ++correct;
      ++report.confusion[static_cast<std::size_t>(*out)][static_cast<std::size_t>(truth)];
    }
    report.fold_units.push_back(run.records[f].size());
    report.fold_classified.push_back(classified);
    report.fold_accuracies.push_back(ratio(correct, classified));
    report.classified += classified;
    report.total += run.records[f].size();
  }
  const auto summary = fold_summary(report.fold_accuracies);
  report.accuracy = summary.mean;
  report.standard_error = summary.standard_error;
  report.classified_fraction = ratio(report.classified, report.total);
  report.rates = class_rates(report.confusion);
  return report;
}

EvalReport cross_validate(const RawDataset& raw, const LabeledPartition& labels,
                          const EnsembleConfig& config, std::size_t k, std::uint64_t seed,
                          std::optional<double> threshold, unsigned threads) {
  return summarize(run_folds(raw, labels, config, k, seed, threads), threshold);
}

std::vector<EvalReport> population_sweep(const RawDataset& raw, const LabeledPartition& labels,
                                         const EnsembleConfig& config,
                                         const std::vector<std::size_t>& sizes, std::size_t k,
                                         std::uint64_t seed, unsigned threads) {
  for (auto s : sizes) {
    if (s == 0 || s > config.population()) {
      throw ArgumentError("population size " + std::to_string(s) + " outside [1, " +
                          std::to_string(config.population()) + "]");
    }
  }
  const auto run = run_folds(raw, labels, config, k, seed, threads);
  std::vector<EvalReport> out;
  for (auto s : sizes) out.push_back(summarize(run, std::nullopt, s));
  return out;
}

std::vector<EvalReport> threshold_sweep(const RawDataset& raw, const LabeledPartition& labels,
                                        const EnsembleConfig& config,
                                        const std::vector<double>& thresholds, std::size_t k,
                                        std::uint64_t seed, unsigned threads) {
  for (double t : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) throw ArgumentError("decision threshold must lie in [0, 1]");
  }
  const auto run = run_folds(raw, labels, config, k, seed, threads);
  std::vector<EvalReport> out;
  for (double t : thresholds) out.push_back(summarize(run, t));
  return out;
}

std::vector<std::size_t> complement_features(const std::vector<std::size_t>& keep,
                                             std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < m; ++j) {
    if (std::find(keep.begin(), keep.end(), j) == keep.end()) out.push_back(j);
  }
  return out;
}

EvalReport ablation_run(const RawDataset& raw, const LabeledPartition& labels,
                        const EnsembleConfig& config, const std::vector<std::size_t>& dropped,
                        std::size_t k, std::uint64_t seed, std::optional<double> threshold,
                        unsigned threads) {
  for (auto j : dropped) {
    if (j >= raw.m) throw ArgumentError("dropped feature " + std::to_string(j + 1) + " out of range");
  }
  const auto keep = complement_features(dropped, raw.m);
  if (keep.size() < static_cast<std::size_t>(std::max(config.eta, 1))) {
    throw ArgumentError(std::to_string(keep.size()) + " features remain, order " +
                        std::to_string(config.eta) + " needs at least that many");
  }
  EvalReport report =
      cross_validate(raw.select_features(keep), labels, config, k, seed, threshold, threads);
  report.dropped_features = dropped;
  std::sort(report.dropped_features.begin(), report.dropped_features.end());
  report.dropped_features.erase(
      std::unique(report.dropped_features.begin(), report.dropped_features.end()),
      report.dropped_features.end());
  return report;
}

std::vector<RuleOutPoint> ruleout_points(const CrossValidationRun& run,
                                         RuleOutTechnique technique,
                                         const std::vector<double>& thresholds) {
  // masses do not depend on the threshold
  std::vector<std::vector<FrequencyTuple>> masses(run.records.size());
  for (std::size_t f = 0; f < run.records.size(); ++f) {
    for (const auto& rec : run.records[f]) {
      masses[f].push_back(class_masses(rec, run.class_count, technique));
    }
  }
  std::vector<RuleOutPoint> out;
  for (double alpha : thresholds) {
    RuleOutPoint point;
    point.technique = technique;
    point.threshold = alpha;
    std::size_t ruled_out = 0;
    std::size_t units = 0;
    for (std::size_t f = 0; f < masses.size(); ++f) {
      std::size_t hits = 0;
      for (std::size_t u = 0; u < masses[f].size(); ++u) {
        const auto result = rule_out(masses[f][u], alpha);
        if (result.contains(run.truth[run.held_out[f][u]])) ++hits;
        ruled_out += result.ruled_out_count;
      }
      units += masses[f].size();
      point.fold_hit_rates.push_back(ratio(hits, masses[f].size()));
    }
    point.hit_rate = fold_summary(point.fold_hit_rates).mean;
    point.mean_ruled_out = ratio(ruled_out, units);
    out.push_back(std::move(point));
  }
  return out;
}

std::vector<RuleOutPoint> ruleout_sweep(const RawDataset& raw, const LabeledPartition& labels,
                                        const EnsembleConfig& config, RuleOutTechnique technique,
                                        const std::vector<double>& thresholds, std::size_t k,
                                        std::uint64_t seed, unsigned threads) {
  for (double a : thresholds) {
    if (!(a > 0.0 && a <= 1.0)) throw ArgumentError("rule-out threshold must lie in (0, 1]");
  }
  return ruleout_points(run_folds(raw, labels, config, k, seed, threads), technique, thresholds);
}

}  // namespace hgc
