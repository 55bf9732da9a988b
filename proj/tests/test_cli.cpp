#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/data_io.hpp"
#include "run_cli.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kIris = std::string("'") + HGC_IRIS_CSV + "'";

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

/// Four one-feature models; three put interval 1 in class a, one in class b.
hgc::EnsembleModel three_to_one() {
  hgc::EnsembleModel ens;
  ens.config.lengths = 4;
  ens.config.origins = 1;
  ens.feature_names = {"x"};
  ens.label_names = {"a", "b"};
  for (int i = 0; i < 4; ++i) {
    hgc::WeightMap w;
    w[hgc::HyperedgeKey{{0}, {0}}] = {0.5, 0.5};
    w[hgc::HyperedgeKey{{0}, {1}}] = i < 3 ? std::vector<double>{1.0, 0.0}
                                           : std::vector<double>{0.0, 1.0};
    ens.models.push_back(hgc::HypergraphModel::from_weights(1, {1.0, 0.0}, {{0.0}, {1.0}}, 0, 1,
                                                            {2, 2}, w));
  }
  return ens;
}

}  // namespace

TEST_CASE("usage errors exit nonzero") {
  CHECK(run_cli("").status != 0);
  CHECK(run_cli("cv").status == 2);
  CHECK(run_cli("cv --data " + kIris + " --bogus 1").status == 2);
  CHECK(run_cli("cv --data /nonexistent.csv").status == 1);
  CHECK(run_cli("cv --data " + kIris + " --label species --eta 9 --lengths 1 --origins 1").status ==
        1);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("cross-validation table") {
  const auto r = run_cli("cv --data " + kIris +
                         " --label species --lengths 5 --origins 2 --folds 5 --seed 7");
  REQUIRE(r.status == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() > 3);
  CHECK(out[0] == "# hgc cv");
  bool seed_line = false;
  for (const auto& l : out) seed_line = seed_line || l == "# seed=7";
  CHECK(seed_line);
  CHECK(r.out.find("models,threshold,accuracy,standard_error") != std::string::npos);
  CHECK(r.out.find("threads") == std::string::npos);
}

TEST_CASE("predict marks a 75 percent vote as unclassified") {
  const auto model = fs::temp_directory_path() / "hgc_cli_three_to_one.bin";
  const auto input = fs::temp_directory_path() / "hgc_cli_units.csv";
  hgc::save_ensemble(three_to_one(), model);
  {
    std::ofstream f(input);
    f << "x\n0.5\n-0.5\n";
  }
  const std::string base = "predict --model '" + model.string() + "' --input '" + input.string() + "'";
  auto r = run_cli(base + " --threshold 0.75");
  REQUIRE(r.status == 0);
  auto out = lines(r.out);
  REQUIRE(out.size() >= 3);
  CHECK(out[out.size() - 3] == "unit,prediction,modal_fraction,fraction_a,fraction_b");
  CHECK(split(out[out.size() - 2])[1] == "UNCLASSIFIED");
  CHECK(split(out[out.size() - 2])[3] == "0.750000");

  r = run_cli(base + " --threshold 0.7");
  out = lines(r.out);
  CHECK(split(out[out.size() - 2])[1] == "a");
  fs::remove(model);
  fs::remove(input);
}

TEST_CASE("train then predict") {
  const auto model = fs::temp_directory_path() / "hgc_cli_iris.bin";
  REQUIRE(run_cli("train --data " + kIris + " --label species --lengths 3 --origins 2 --out '" +
                  model.string() + "'")
              .status == 0);
  const auto r = run_cli("predict --model '" + model.string() + "' --input " + kIris +
                         " --label species");
  REQUIRE(r.status == 0);
  std::size_t rows = 0;
  for (const auto& l : lines(r.out)) rows += !l.empty() && l[0] != '#';
  CHECK(rows == 151);
  fs::remove(model);
}

TEST_CASE("threshold sweep coverage is non-increasing") {
  const auto r = run_cli("sweep-threshold --data " + kIris +
                         " --label species --lengths 10 --origins 3 --seed 2"
                         " --thresholds 0,0.25,0.5,0.75");
  REQUIRE(r.status == 0);
  std::vector<double> coverage;
  bool table = false;
  for (const auto& l : lines(r.out)) {
    if (l.rfind("threshold,", 0) == 0) {
      table = true;
      continue;
    }
    if (table && !l.empty()) coverage.push_back(std::stod(split(l).back()));
  }
  REQUIRE(coverage.size() == 4);
  CHECK(coverage[0] == 1.0);
  for (std::size_t i = 1; i < coverage.size(); ++i) CHECK(coverage[i] <= coverage[i - 1]);
}

TEST_CASE("other commands run") {
  const std::string common = " --data " + kIris + " --label species --lengths 4 --origins 2";
  CHECK(run_cli("sweep-pop" + common + " --sizes 1,4,8").status == 0);
  CHECK(run_cli("ruleout" + common + " --technique both --alphas 0.5,0.9").status == 0);
  CHECK(run_cli("ruleout" + common + " --alphas 0").status != 0);
  CHECK(run_cli("ablate" + common + " --drop-each").status == 0);
  CHECK(run_cli("ablate" + common + " --drop petal_width --drop 1").status == 0);
  CHECK(run_cli("ablate" + common + " --drop nosuch").status == 1);
  const auto s = run_cli("synth --generator interaction --per-class 5 --noise 1 --seed 3");
  CHECK(s.status == 0);
  CHECK(lines(s.out).size() >= 11);
}
