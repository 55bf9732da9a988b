// hgc: command-line front end for hypergraph ensemble classification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/data_io.hpp"
#include "hgc/eval.hpp"
#include "hgc/report.hpp"
#include "hgc/synth.hpp"

namespace {

using namespace hgc;

// Flags shared by every command that trains an ensemble. Values stay unset
// unless given on the command line so the config file can fill them in.
struct TrainingFlags {
  std::string data;
  std::optional<std::string> label;
  std::optional<std::string> config_file;
  std::optional<int> eta, lengths, origins;
  std::optional<double> length_min, length_max, origin_min, origin_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> folds;
  std::optional<unsigned> threads;
  char delimiter = ',';

  void attach(CLI::App* cmd, bool with_folds) {
    cmd->add_option("--data", data, "Training table (header row + numeric columns)")->required();
    cmd->add_option("--label", label, "Name of the class label column");
    cmd->add_option("--config", config_file, "key = value file supplying defaults");
    cmd->add_option("--eta", eta, "Hyperedge order");
    cmd->add_option("--lengths", lengths, "Number of sampled interval lengths (L)");
    cmd->add_option("--origins", origins, "Number of sampled origins (A)");
    cmd->add_option("--length-min", length_min);
    cmd->add_option("--length-max", length_max);
    cmd->add_option("--origin-min", origin_min);
    cmd->add_option("--origin-max", origin_max);
    cmd->add_option("--seed", seed, "Seed for parameter sampling and fold assignment");
    if (with_folds) cmd->add_option("--folds", folds, "Cross-validation folds");
    cmd->add_option("--threads", threads, "Worker threads (default: HGC_THREADS or all cores)");
    cmd->add_option("--delimiter", delimiter, "Field delimiter");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (config_file) cfg = load_config(*config_file, cfg);
    auto& e = cfg.ensemble;
    if (label) cfg.label_column = *label;
    if (eta) e.eta = *eta;
    if (lengths) e.lengths = *lengths;
    if (origins) e.origins = *origins;
    if (length_min) e.length_min = *length_min;
    if (length_max) e.length_max = *length_max;
    if (origin_min) e.origin_min = *origin_min;
    if (origin_max) e.origin_max = *origin_max;
    if (seed) e.seed = *seed;
    if (folds) cfg.folds = *folds;
    e.validate();
    return cfg;
  }

  unsigned width() const { return threads.value_or(default_parallelism()); }

  Settings settings(const RunConfig& cfg, bool with_folds) const {
    Settings s{{"data", data}, {"label", cfg.label_column}};
    for (auto& kv : describe(cfg.ensemble)) s.push_back(kv);
    if (with_folds) s.emplace_back("folds", std::to_string(cfg.folds));
    return s;
  }
};

template <class T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) throw ArgumentError("cannot parse list item '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// Features by 1-based index or by name.
std::vector<std::size_t> parse_features(const std::string& text,
                                        const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto it = std::find(names.begin(), names.end(), item);
    if (it != names.end()) {
      out.push_back(static_cast<std::size_t>(it - names.begin()));
      continue;
    }
    std::size_t pos = 0;
    long index = 0;
    try {
      index = std::stol(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || index < 1 || static_cast<std::size_t>(index) > names.size()) {
      throw ArgumentError("unknown feature '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(index - 1));
  }
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ';';
    out += format_exact(v);
  }
  return out;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += ';';
    out += std::to_string(v);
  }
  return out;
}

struct Loaded {
  RunConfig cfg;
  RawDataset raw;
};

Loaded load(const TrainingFlags& flags) {
  Loaded l{flags.resolve(), {}};
  l.raw = load_csv(flags.data, l.cfg.label_column, flags.delimiter);
  l.raw.validate();
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph ensemble classifier"};
  app.require_subcommand(1);

  // train
  TrainingFlags train_flags;
  std::string train_out;
  auto* train = app.add_subcommand("train", "Train an ensemble and save it");
  train_flags.attach(train, false);
  train->add_option("--out", train_out, "Ensemble file to write")->required();

  // predict
  std::string predict_model, predict_input;
  std::optional<std::string> predict_label;
  std::optional<double> predict_threshold;
  std::optional<unsigned> predict_threads;
  char predict_delimiter = ',';
  auto* predict = app.add_subcommand("predict", "Classify units with a saved ensemble");
  predict->add_option("--model", predict_model, "Ensemble file")->required();
  predict->add_option("--input", predict_input, "Table of units to classify")->required();
  predict->add_option("--label", predict_label, "Label column to ignore, if present");
  predict->add_option("--threshold", predict_threshold, "Decision threshold in [0, 1]");
  predict->add_option("--threads", predict_threads);
  predict->add_option("--delimiter", predict_delimiter);

  // cv
  TrainingFlags cv_flags;
  std::optional<double> cv_threshold;
  auto* cv = app.add_subcommand("cv", "Stratified k-fold cross-validation");
  cv_flags.attach(cv, true);
  cv->add_option("--threshold", cv_threshold, "Decision threshold in [0, 1]");

  // sweep-pop
  TrainingFlags pop_flags;
  std::string pop_sizes;
  auto* sweep_pop = app.add_subcommand("sweep-pop", "Accuracy against population size");
  pop_flags.attach(sweep_pop, true);
  sweep_pop->add_option("--sizes", pop_sizes, "Comma-separated population sizes")->required();

  // sweep-threshold
  TrainingFlags thr_flags;
  std::string thr_list;
  auto* sweep_thr = app.add_subcommand("sweep-threshold", "Accuracy and coverage against threshold");
  thr_flags.attach(sweep_thr, true);
  sweep_thr->add_option("--thresholds", thr_list, "Comma-separated thresholds in [0, 1]")->required();

  // ruleout
  TrainingFlags ro_flags;
  std::string ro_technique = "both";
  std::string ro_alphas;
  auto* ruleout = app.add_subcommand("ruleout", "Hit rate and classes ruled out against threshold");
  ro_flags.attach(ruleout, true);
  ruleout->add_option("--technique", ro_technique, "prediction, distribution or both")
      ->check(CLI::IsMember({"prediction", "distribution", "both"}));
  ruleout->add_option("--alphas", ro_alphas, "Comma-separated thresholds in (0, 1]")->required();

  // ablate
  TrainingFlags ab_flags;
  std::vector<std::string> ab_drop, ab_keep;
  std::optional<std::string> ab_incremental;
  bool ab_each = false;
  std::optional<double> ab_threshold;
  auto* ablate = app.add_subcommand("ablate", "Cross-validation with features removed");
  ab_flags.attach(ablate, true);
  ablate->add_option("--drop", ab_drop, "Features to drop (1-based indices or names, comma-separated); repeatable");
  ablate->add_option("--keep", ab_keep, "Features to keep; repeatable");
  ablate->add_flag("--drop-each", ab_each, "One run per feature with only that feature removed");
  ablate->add_option("--keep-incremental", ab_incremental,
                     "Runs keeping the first 1, 2, ... of the listed features");
  ablate->add_option("--threshold", ab_threshold, "Decision threshold in [0, 1]");

  // synth
  std::string syn_generator = "gaussian";
  std::size_t syn_classes = 3, syn_features = 4, syn_per_class = 100, syn_noise = 0;
  double syn_separation = 1.0;
  std::uint64_t syn_seed = 0;
  std::optional<std::string> syn_out;
  std::string syn_label = "label";
  auto* synth = app.add_subcommand("synth", "Write a synthetic dataset");
  synth->add_option("--generator", syn_generator, "gaussian or interaction")
      ->check(CLI::IsMember({"gaussian", "interaction"}));
  synth->add_option("--classes", syn_classes);
  synth->add_option("--features", syn_features);
  synth->add_option("--per-class", syn_per_class);
  synth->add_option("--separation", syn_separation);
  synth->add_option("--noise", syn_noise, "Noise features (interaction generator)");
  synth->add_option("--seed", syn_seed);
  synth->add_option("--label", syn_label, "Name of the label column");
  synth->add_option("--out", syn_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto& out = std::cout;
    if (*train) {
      auto [cfg, raw] = load(train_flags);
      const auto ens = train_population(raw, LabeledPartition::from_dataset(raw), cfg.ensemble,
                                        train_flags.width());
      save_ensemble(ens, train_out);
      write_settings(out, "train", train_flags.settings(cfg, false));
      out << "models,units,features,classes,out\n"
          << ens.models.size() << ',' << raw.n << ',' << raw.m << ',' << raw.class_count() << ','
          << train_out << '\n';
    } else if (*predict) {
      const auto ens = load_ensemble(predict_model);
      const auto units = load_units(predict_input, ens.feature_names, predict_label, predict_delimiter);
      const auto records = predict_records(units, ens, predict_threads.value_or(default_parallelism()));
      Settings s{{"model", predict_model}, {"input", predict_input}};
      for (auto& kv : describe(ens.config)) s.push_back(kv);
      s.emplace_back("threshold", predict_threshold ? format_exact(*predict_threshold) : "none");
      write_settings(out, "predict", s);
      out << "unit,prediction,modal_fraction";
      for (const auto& name : ens.label_names) out << ",fraction_" << name;
      out << '\n';
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto cls = predict_threshold ? thresholded_prediction(records[i], *predict_threshold)
                                           : std::optional<int>(final_prediction(records[i]));
        out << i + 1 << ','
            << (cls ? ens.label_names[static_cast<std::size_t>(*cls)] : std::string("UNCLASSIFIED"))
            << ',' << format_metric(modal_fraction(records[i].votes));
        for (double f : vote_frequencies(records[i], ens.class_count()).values) {
          out << ',' << format_metric(f);
        }
        out << '\n';
      }
    } else if (*cv) {
      auto [cfg, raw] = load(cv_flags);
      if (cv_threshold) cfg.threshold = cv_threshold;
      const auto report =
          cross_validate(raw, LabeledPartition::from_dataset(raw), cfg.ensemble, cfg.folds,
                         cfg.ensemble.seed, cfg.threshold, cv_flags.width());
      auto s = cv_flags.settings(cfg, true);
      s.emplace_back("threshold", cfg.threshold ? format_exact(*cfg.threshold) : "none");
      write_settings(out, "cv", s);
      write_cv_report(out, report, raw.label_names);
    } else if (*sweep_pop) {
      auto [cfg, raw] = load(pop_flags);
      const auto sizes = parse_list<std::size_t>(pop_sizes);
      const auto reports =
          population_sweep(raw, LabeledPartition::from_dataset(raw), cfg.ensemble, sizes,
                           cfg.folds, cfg.ensemble.seed, pop_flags.width());
      auto s = pop_flags.settings(cfg, true);
      s.emplace_back("sizes", join(sizes));
      write_settings(out, "sweep-pop", s);
      write_population_table(out, reports);
    } else if (*sweep_thr) {
      auto [cfg, raw] = load(thr_flags);
      const auto thresholds = parse_list<double>(thr_list);
      const auto reports =
          threshold_sweep(raw, LabeledPartition::from_dataset(raw), cfg.ensemble, thresholds,
                          cfg.folds, cfg.ensemble.seed, thr_flags.width());
      auto s = thr_flags.settings(cfg, true);
      s.emplace_back("thresholds", join(thresholds));
      write_settings(out, "sweep-threshold", s);
      write_threshold_table(out, reports);
    } else if (*ruleout) {
      auto [cfg, raw] = load(ro_flags);
      const auto alphas = parse_list<double>(ro_alphas);
      for (double a : alphas) {
        if (!(a > 0.0 && a <= 1.0)) throw ArgumentError("rule-out threshold must lie in (0, 1]");
      }
      const auto run = run_folds(raw, LabeledPartition::from_dataset(raw), cfg.ensemble,
                                 cfg.folds, cfg.ensemble.seed, ro_flags.width());
      std::vector<RuleOutPoint> points;
      for (auto technique : {RuleOutTechnique::Prediction, RuleOutTechnique::Distribution}) {
        if (ro_technique != "both" && ro_technique != technique_name(technique)) continue;
        for (auto& p : ruleout_points(run, technique, alphas)) points.push_back(std::move(p));
      }
      auto s = ro_flags.settings(cfg, true);
      s.emplace_back("technique", ro_technique);
      s.emplace_back("alphas", join(alphas));
      write_settings(out, "ruleout", s);
      write_ruleout_table(out, points);
    } else if (*ablate) {
      auto [cfg, raw] = load(ab_flags);
      if (ab_threshold) cfg.threshold = ab_threshold;
      std::vector<std::vector<std::size_t>> drop_sets;
      for (const auto& d : ab_drop) drop_sets.push_back(parse_features(d, raw.feature_names));
      for (const auto& k : ab_keep) {
        drop_sets.push_back(complement_features(parse_features(k, raw.feature_names), raw.m));
      }
      if (ab_each) {
        for (std::size_t j = 0; j < raw.m; ++j) drop_sets.push_back({j});
      }
      if (ab_incremental) {
        const auto order = parse_features(*ab_incremental, raw.feature_names);
        for (std::size_t n = 1; n <= order.size(); ++n) {
          const std::vector<std::size_t> keep(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
          drop_sets.push_back(complement_features(keep, raw.m));
        }
      }
      if (drop_sets.empty()) drop_sets.push_back({});
      const auto labels = LabeledPartition::from_dataset(raw);
      std::vector<EvalReport> reports;
      for (const auto& dropped : drop_sets) {
        reports.push_back(ablation_run(raw, labels, cfg.ensemble, dropped, cfg.folds,
                                       cfg.ensemble.seed, cfg.threshold, ab_flags.width()));
      }
      auto s = ab_flags.settings(cfg, true);
      s.emplace_back("threshold", cfg.threshold ? format_exact(*cfg.threshold) : "none");
      write_settings(out, "ablate", s);
      write_ablation_table(out, reports, raw.feature_names);
    } else if (*synth) {
      const RawDataset raw =
          syn_generator == "gaussian"
              ? gaussian_mixture(syn_classes, syn_features, syn_per_class, syn_separation, syn_seed)
              : interaction_only(syn_per_class, syn_noise, syn_seed);
      if (syn_out) {
        std::ofstream f(*syn_out);
        if (!f) throw IoError("cannot write '" + *syn_out + "'");
        write_csv(f, raw, syn_label);
      } else {
        write_csv(out, raw, syn_label);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "hgc: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
