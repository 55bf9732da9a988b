#pragma once

// Plot-ready comma-separated tables for evaluation results.
//
// Every table starts with `#` lines listing the resolved run settings,
// followed by a header row. Metrics print with six decimals; undefined
// values print as "nan".

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hgc/ensemble.hpp"
#include "hgc/eval.hpp"

namespace hgc {

using Settings = std::vector<std::pair<std::string, std::string>>;

std::string format_metric(double v);
/// Shortest round-trip representation.
std::string format_exact(double v);

Settings describe(const EnsembleConfig& config);
void write_settings(std::ostream& out, const std::string& command, const Settings& settings);

/// Summary, per-fold, confusion and per-class rate blocks, separated by blank lines.
void write_cv_report(std::ostream& out, const EvalReport& report,
                     const std::vector<std::string>& label_names);
void write_population_table(std::ostream& out, const std::vector<EvalReport>& reports);
void write_threshold_table(std::ostream& out, const std::vector<EvalReport>& reports);
void write_ruleout_table(std::ostream& out, const std::vector<RuleOutPoint>& points);
void write_ablation_table(std::ostream& out, const std::vector<EvalReport>& reports,
                          const std::vector<std::string>& feature_names);

std::string technique_name(RuleOutTechnique technique);

}  // namespace hgc
