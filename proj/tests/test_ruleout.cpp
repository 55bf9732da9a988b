#include <doctest.h>

#include <vector>

#include "hgc/errors.hpp"
#include "hgc/random.hpp"
#include "hgc/ruleout.hpp"

using hgc::FrequencyTuple;
using hgc::PredictionRecord;

namespace {

PredictionRecord votes_only(std::vector<int> votes) {
  PredictionRecord rec;
  rec.votes = std::move(votes);
  return rec;
}

FrequencyTuple random_masses(hgc::Rng& rng, std::size_t c) {
  FrequencyTuple f;
  double total = 0.0;
  for (std::size_t k = 0; k < c; ++k) {
    // Coarse values so ties occur often.
    f.values.push_back(static_cast<double>(hgc::uniform_index(rng, 4)));
    total += f.values.back();
  }
  if (total == 0.0) {
    f.values[0] = 1.0;
    total = 1.0;
  }
  for (auto& v : f.values) v /= total;
  return f;
}

}  // namespace

TEST_CASE("vote frequencies") {
  auto f = hgc::vote_frequencies(votes_only({0, 0, 1}), 2);
  CHECK(f.values[0] == doctest::Approx(2.0 / 3.0));
  CHECK(f.values[1] == doctest::Approx(1.0 / 3.0));
  f = hgc::vote_frequencies(votes_only({1, 1, 1}), 2);
  CHECK(f.values == std::vector<double>{0.0, 1.0});
  f = hgc::vote_frequencies(votes_only({2, 2}), 3);
  CHECK(f.values == std::vector<double>{0.0, 0.0, 1.0});
}

TEST_CASE("mean distribution") {
  PredictionRecord one;
  one.votes = {0};
  one.mean_tuples = {{{0.2, 0.1}}};
  auto f = hgc::mean_distribution(one);
  CHECK(f.values[0] == doctest::Approx(2.0 / 3.0));
  CHECK(f.values[1] == doctest::Approx(1.0 / 3.0));

  PredictionRecord tied;
  tied.votes = {0, 0};
  tied.mean_tuples = {{{0.1, 0.1, 0.1}}, {{0.3, 0.3, 0.3}}};
  for (double v : hgc::mean_distribution(tied).values) CHECK(v == doctest::Approx(1.0 / 3.0));

  PredictionRecord opposite;
  opposite.votes = {0, 1};
  opposite.mean_tuples = {{{0.4, 0.0}}, {{0.0, 0.4}}};
  f = hgc::mean_distribution(opposite);
  CHECK(f.values[0] == doctest::Approx(0.5));
  CHECK(f.values[1] == doctest::Approx(0.5));
  CHECK(hgc::class_masses(opposite, 2, hgc::RuleOutTechnique::Distribution).values == f.values);
  CHECK(hgc::class_masses(opposite, 2, hgc::RuleOutTechnique::Prediction).values ==
        std::vector<double>{0.5, 0.5});
}

TEST_CASE("rule-out examples") {
  auto r = hgc::rule_out({{0.5, 0.3, 0.2}}, 0.7);
  CHECK(r.kept == std::vector<int>{0, 1});
  CHECK(r.ruled_out_count == 1);
  CHECK(r.contains(1));
  CHECK_FALSE(r.contains(2));

  r = hgc::rule_out({{0.4, 0.4, 0.2}}, 0.4);
  CHECK(r.kept == std::vector<int>{0});

  r = hgc::rule_out({{0.0, 0.75, 0.25}}, 1.0);
  CHECK(r.kept == std::vector<int>{1, 2});
  CHECK(r.ruled_out_count == 1);
}

TEST_CASE("rule-out argument checks") {
  CHECK_THROWS_AS(hgc::rule_out({{0.5, 0.5}}, 0.0), hgc::ArgumentError);
  CHECK_THROWS_AS(hgc::rule_out({{0.5, 0.5}}, 1.01), hgc::ArgumentError);
  CHECK_THROWS_AS(hgc::rule_out({{0.5, 0.4}}, 0.5), hgc::ArgumentError);
}

TEST_CASE("kept sets are nested and minimal") {
  hgc::Rng rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_masses(rng, 2 + hgc::uniform_index(rng, 5));
    std::vector<int> previous;
    for (int step = 1; step <= 20; ++step) {
      const double alpha = step / 20.0;
      const auto r = hgc::rule_out(f, alpha);
      // Growing alpha only appends classes.
      REQUIRE(r.kept.size() >= previous.size());
      CHECK(std::equal(previous.begin(), previous.end(), r.kept.begin()));
      double mass = 0.0;
      for (int k : r.kept) mass += f.values[static_cast<std::size_t>(k)];
      CHECK(mass >= alpha - 1e-9);
      const double without_last = mass - f.values[static_cast<std::size_t>(r.kept.back())];
      CHECK(without_last < alpha - 1e-9);
      CHECK(r.ruled_out_count + r.kept.size() == f.values.size());
      previous = r.kept;
    }
  }
}

TEST_CASE("unanimous votes keep one class") {
  const auto f = hgc::vote_frequencies(votes_only({1, 1, 1, 1}), 3);
  CHECK(f.values == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(hgc::rule_out(f, 1.0).kept == std::vector<int>{1});
}
