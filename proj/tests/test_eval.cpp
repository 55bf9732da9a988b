#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "hgc/errors.hpp"
#include "hgc/eval.hpp"
#include "hgc/synth.hpp"

using hgc::EnsembleConfig;

namespace {

EnsembleConfig config(int lengths, int origins, int eta = 1) {
  EnsembleConfig c;
  c.lengths = lengths;
  c.origins = origins;
  c.eta = eta;
  c.seed = 3;
  return c;
}

hgc::RawDataset separable() {
  // Class k occupies [10k, 10k + 1] on both features.
  hgc::RawDataset raw;
  raw.m = 2;
  raw.feature_names = {"a", "b"};
  raw.label_names = {"x", "y", "z"};
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 10; ++i) {
      raw.values.push_back(10.0 * k + i / 10.0);
      raw.values.push_back(10.0 * k + (9 - i) / 10.0);
      raw.labels.push_back(k);
    }
  }
  raw.n = raw.labels.size();
  return raw;
}

void check_same(const hgc::EvalReport& a, const hgc::EvalReport& b) {
  CHECK(a.accuracy == b.accuracy);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.confusion == b.confusion);
  CHECK(a.classified == b.classified);
  CHECK(a.fold_accuracies == b.fold_accuracies);
}

}  // namespace

TEST_CASE("stratified folds of equal classes") {
  std::vector<int> labels;
  for (int k = 0; k < 3; ++k) labels.insert(labels.end(), 50, k);
  const hgc::LabeledPartition p(labels, 3);
  const auto folds = hgc::stratified_kfold(p, 5, 1);
  for (std::size_t f = 0; f < 5; ++f) {
    std::vector<int> per_class(3, 0);
    for (auto u : folds.units(f)) ++per_class[static_cast<std::size_t>(labels[u])];
    CHECK(per_class == std::vector<int>{10, 10, 10});
    CHECK(folds.complement(f).size() == 120);
  }
  CHECK(hgc::stratified_kfold(p, 5, 1).assignments == folds.assignments);
  CHECK(hgc::stratified_kfold(p, 5, 2).assignments != folds.assignments);
}

TEST_CASE("stratified folds of an uneven class") {
  std::vector<int> labels(123, 0);
  labels.insert(labels.end(), 7, 1);
  const auto folds = hgc::stratified_kfold(hgc::LabeledPartition(labels, 2), 5, 4);
  for (std::size_t f = 0; f < 5; ++f) {
    std::size_t big = 0;
    for (auto u : folds.units(f)) big += labels[u] == 0;
    CHECK((big == 24 || big == 25));
  }
  CHECK_THROWS_AS(hgc::stratified_kfold(hgc::LabeledPartition({0, 0, 1}, 2), 2, 0),
                  hgc::ArgumentError);
  CHECK_THROWS_AS(hgc::stratified_kfold(hgc::LabeledPartition({0, 1}, 2), 1, 0),
                  hgc::ArgumentError);
}

TEST_CASE("separable data is classified perfectly") {
  const auto raw = separable();
  const auto labels = hgc::LabeledPartition::from_dataset(raw);
  const auto report = hgc::cross_validate(raw, labels, config(5, 2), 5, 2, std::nullopt, 1);
  CHECK(report.accuracy == 1.0);
  CHECK(report.standard_error == 0.0);
  for (std::size_t o = 0; o < 3; ++o) {
    for (std::size_t t = 0; t < 3; ++t) {
      if (o != t) CHECK(report.confusion[o][t] == 0);
    }
  }
  CHECK(report.classified == 30);
  CHECK(report.rates[1].tpr == 1.0);
  CHECK(report.rates[1].fpr == 0.0);
}

TEST_CASE("threshold zero matches the plain report") {
  const auto raw = hgc::gaussian_mixture(3, 2, 20, 1.0, 6);
  const auto labels = hgc::LabeledPartition::from_dataset(raw);
  const auto run = hgc::run_folds(raw, labels, config(4, 3), 4, 8, 1);
  const auto plain = hgc::summarize(run, std::nullopt);
  const auto zero = hgc::summarize(run, 0.0);
  check_same(plain, zero);
  CHECK(zero.classified_fraction == 1.0);

  // Accuracy is the mean of per-fold accuracies and SE the sample deviation over sqrt(k).
  const double mean =
      std::accumulate(plain.fold_accuracies.begin(), plain.fold_accuracies.end(), 0.0) / 4.0;
  double ss = 0.0;
  for (double a : plain.fold_accuracies) ss += (a - mean) * (a - mean);
  CHECK(plain.accuracy == doctest::Approx(mean));
  CHECK(plain.standard_error == doctest::Approx(std::sqrt(ss / 3.0) / 2.0));

  check_same(hgc::cross_validate(raw, labels, config(4, 3), 4, 8, std::nullopt, 2), plain);
}

TEST_CASE("sweeps reuse the cross-validation run") {
  const auto raw = hgc::gaussian_mixture(3, 2, 20, 1.0, 6);
  const auto labels = hgc::LabeledPartition::from_dataset(raw);
  const auto cfg = config(4, 3);
  const auto full = hgc::cross_validate(raw, labels, cfg, 4, 8, std::nullopt, 1);

  const auto pop = hgc::population_sweep(raw, labels, cfg, {1, 12}, 4, 8, 1);
  REQUIRE(pop.size() == 2);
  check_same(pop[1], full);
  CHECK(pop[0].models == 1);
  CHECK_THROWS_AS(hgc::population_sweep(raw, labels, cfg, {13}, 4, 8, 1), hgc::ArgumentError);
  CHECK_THROWS_AS(hgc::population_sweep(raw, labels, cfg, {0}, 4, 8, 1), hgc::ArgumentError);

  // The size-1 prefix is the first sampled model used on its own.
  const auto run = hgc::run_folds(raw, labels, cfg, 4, 8, 1);
  check_same(pop[0], hgc::summarize(run, std::nullopt, 1));
  const auto folds = hgc::stratified_kfold(labels, 4, 8);
  const auto first = hgc::sample_params(cfg)[0];
  for (std::size_t f = 0; f < 4; ++f) {
    const auto train = raw.subset(folds.complement(f));
    const auto model =
        hgc::train_model(train, hgc::LabeledPartition::from_dataset(train), first, 1);
    const auto held = folds.units(f);
    for (std::size_t u = 0; u < held.size(); ++u) {
      CHECK(run.records[f][u].votes[0] ==
            hgc::predict_class(hgc::raw_mean_tuple(raw.unit(held[u]), model)));
    }
  }

  const auto th = hgc::threshold_sweep(raw, labels, cfg, {0.0, 0.25, 0.5, 0.75, 0.9}, 4, 8, 1);
  for (std::size_t i = 1; i < th.size(); ++i) {
    CHECK(th[i].classified_fraction <= th[i - 1].classified_fraction);
  }
}

TEST_CASE("ablation") {
  const auto raw = hgc::gaussian_mixture(2, 3, 20, 1.5, 12);
  const auto labels = hgc::LabeledPartition::from_dataset(raw);
  check_same(hgc::ablation_run(raw, labels, config(3, 2), {}, 4, 1, std::nullopt, 1),
             hgc::cross_validate(raw, labels, config(3, 2), 4, 1, std::nullopt, 1));
  const auto dropped = hgc::complement_features({1}, 3);
  CHECK(dropped == std::vector<std::size_t>{0, 2});
  const auto one = hgc::ablation_run(raw, labels, config(3, 2), dropped, 4, 1, std::nullopt, 1);
  CHECK(one.dropped_features == dropped);
  CHECK_THROWS_AS(
      hgc::ablation_run(raw, labels, config(3, 2, 2), dropped, 4, 1, std::nullopt, 1),
      hgc::ArgumentError);
}

TEST_CASE("class rates reconcile with the confusion matrix") {
  const std::vector<std::vector<std::size_t>> confusion{{8, 1, 0}, {2, 7, 3}, {0, 2, 7}};
  const auto rates = hgc::class_rates(confusion);
  std::size_t total = 0;
  for (const auto& row : confusion) total += std::accumulate(row.begin(), row.end(), std::size_t{0});
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t tp = confusion[k][k], actual = 0, predicted = 0;
    for (std::size_t o = 0; o < 3; ++o) actual += confusion[o][k];
    for (std::size_t t = 0; t < 3; ++t) predicted += confusion[k][t];
    const double fp = static_cast<double>(predicted - tp);
    const double negatives = static_cast<double>(total - actual);
    CHECK(rates[k].tpr == doctest::Approx(static_cast<double>(tp) / actual));
    CHECK(rates[k].tpr + rates[k].fnr == doctest::Approx(1.0));
    CHECK(rates[k].fpr == doctest::Approx(fp / negatives));
    CHECK(rates[k].fpr + rates[k].tnr == doctest::Approx(1.0));
  }
  const auto empty = hgc::class_rates({{3, 0}, {0, 0}});
  CHECK(std::isnan(empty[1].tpr));
  CHECK(std::isnan(empty[0].fpr));
}

TEST_CASE("rule-out sweep") {
  const auto raw = hgc::gaussian_mixture(4, 2, 16, 0.8, 14);
  const auto labels = hgc::LabeledPartition::from_dataset(raw);
  const auto run = hgc::run_folds(raw, labels, config(4, 3), 4, 5, 1);
  const auto plain = hgc::summarize(run, std::nullopt);
  for (auto technique : {hgc::RuleOutTechnique::Prediction, hgc::RuleOutTechnique::Distribution}) {
    const std::vector<double> alphas{1e-6, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 1.0};
    const auto points = hgc::ruleout_points(run, technique, alphas);
    REQUIRE(points.size() == alphas.size());
    for (std::size_t i = 1; i < points.size(); ++i) {
      CHECK(points[i].hit_rate >= points[i - 1].hit_rate);
      CHECK(points[i].mean_ruled_out <= points[i - 1].mean_ruled_out);
    }
    if (technique == hgc::RuleOutTechnique::Prediction) {
      CHECK(points[0].hit_rate == plain.accuracy);
    }
  }

  // With all mass required, prediction rule-out hits exactly when the true class got a vote.
  const auto full = hgc::ruleout_points(run, hgc::RuleOutTechnique::Prediction, {1.0});
  double hits = 0.0;
  for (std::size_t f = 0; f < run.records.size(); ++f) {
    double fold_hits = 0.0;
    for (std::size_t u = 0; u < run.records[f].size(); ++u) {
      const int truth = run.truth[run.held_out[f][u]];
      const auto& v = run.records[f][u].votes;
      fold_hits += std::find(v.begin(), v.end(), truth) != v.end();
    }
    hits += fold_hits / run.records[f].size();
  }
  CHECK(full[0].hit_rate == doctest::Approx(hits / run.records.size()));
}
