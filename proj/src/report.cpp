#include "hgc/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hgc {

std::string format_metric(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_exact(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

Settings describe(const EnsembleConfig& config) {
  return {{"eta", std::to_string(config.eta)},
          {"lengths", std::to_string(config.lengths)},
          {"origins", std::to_string(config.origins)},
          {"length_min", format_exact(config.length_min)},
          {"length_max", format_exact(config.length_max)},
          {"origin_min", format_exact(config.origin_min)},
          {"origin_max", format_exact(config.origin_max)},
          {"seed", std::to_string(config.seed)}};
}

void write_settings(std::ostream& out, const std::string& command, const Settings& settings) {
  out << "# hgc " << command << '\n';
  for (const auto& [key, value] : settings) out << "# " << key << '=' << value << '\n';
}

void write_cv_report(std::ostream& out, const EvalReport& report,
                     const std::vector<std::string>& label_names) {
  out << "models,threshold,accuracy,standard_error,classified,total,classified_fraction\n";
  out << report.models << ',' << (report.threshold ? format_exact(*report.threshold) : "none")
      << ',' << format_metric(report.accuracy) << ',' << format_metric(report.standard_error)
      << ',' << report.classified << ',' << report.total << ','
      << format_metric(report.classified_fraction) << "\n\n";

  out << "fold,units,classified,accuracy\n";
  for (std::size_t f = 0; f < report.fold_accuracies.size(); ++f) {
    out << f + 1 << ',' << report.fold_units[f] << ',' << report.fold_classified[f] << ','
        << format_metric(report.fold_accuracies[f]) << '\n';
  }
  out << '\n';

  out << "output\\true";
  for (const auto& name : label_names) out << ',' << name;
  out << '\n';
  for (std::size_t o = 0; o < report.confusion.size(); ++o) {
    out << label_names[o];
    for (auto count : report.confusion[o]) out << ',' << count;
    out << '\n';
  }
  out << '\n';

  out << "class,tpr,fnr,fpr,tnr\n";
  for (std::size_t k = 0; k < report.rates.size(); ++k) {
    const auto& r = report.rates[k];
    out << label_names[k] << ',' << format_metric(r.tpr) << ',' << format_metric(r.fnr) << ','
        << format_metric(r.fpr) << ',' << format_metric(r.tnr) << '\n';
  }
}

void write_population_table(std::ostream& out, const std::vector<EvalReport>& reports) {
  out << "models,accuracy,standard_error,classified_fraction\n";
  for (const auto& r : reports) {
    out << r.models << ',' << format_metric(r.accuracy) << ',' << format_metric(r.standard_error)
        << ',' << format_metric(r.classified_fraction) << '\n';
  }
}

void write_threshold_table(std::ostream& out, const std::vector<EvalReport>& reports) {
  out << "threshold,accuracy,standard_error,classified,total,classified_fraction\n";
  for (const auto& r : reports) {
    out << (r.threshold ? format_exact(*r.threshold) : "none") << ','
        << format_metric(r.accuracy) << ',' << format_metric(r.standard_error) << ','
        << r.classified << ',' << r.total << ',' << format_metric(r.classified_fraction) << '\n';
  }
}

std::string technique_name(RuleOutTechnique technique) {
  return technique == RuleOutTechnique::Prediction ? "prediction" : "distribution";
}

void write_ruleout_table(std::ostream& out, const std::vector<RuleOutPoint>& points) {
  out << "technique,threshold,hit_rate,mean_ruled_out\n";
  for (const auto& p : points) {
    out << technique_name(p.technique) << ',' << format_exact(p.threshold) << ','
        << format_metric(p.hit_rate) << ',' << format_metric(p.mean_ruled_out) << '\n';
  }
}

void write_ablation_table(std::ostream& out, const std::vector<EvalReport>& reports,
                          const std::vector<std::string>& feature_names) {
  out << "dropped,remaining,accuracy,standard_error,classified_fraction\n";
  for (const auto& r : reports) {
    std::string dropped;
    for (auto j : r.dropped_features) {
      if (!dropped.empty()) dropped += ';';
      dropped += feature_names[j];
    }
    out << (dropped.empty() ? "none" : dropped) << ','
        << feature_names.size() - r.dropped_features.size() << ',' << format_metric(r.accuracy)
        << ',' << format_metric(r.standard_error) << ',' << format_metric(r.classified_fraction)
        << '\n';
  }
}

}  // namespace hgc
