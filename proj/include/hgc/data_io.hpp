#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgc/dataset.hpp"
#include "hgc/ensemble.hpp"
#include "hgc/errors.hpp"

namespace hgc {

/// Problems found while parsing a delimited table.
class CsvError : public DataError {
 public:
  enum class Kind { MissingColumn, NonNumeric, Ragged, Empty };
  CsvError(Kind kind, const std::string& what) : DataError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Reads a header-first delimited table. Every column except `label_column`
/// must be numeric; class indices follow first appearance of each label.
/// Errors cite the 1-based data row (header excluded) and the column name.
RawDataset load_csv(const std::filesystem::path& path, const std::string& label_column,
                    char delimiter = ',');
RawDataset parse_csv(std::istream& in, const std::string& label_column, char delimiter = ',');

/// Reads feature rows for prediction against known feature names. The label
/// column, if present, is ignored; feature columns are matched by name.
RawDataset load_units(const std::filesystem::path& path,
                      const std::vector<std::string>& feature_names,
                      const std::optional<std::string>& label_column, char delimiter = ',');

void write_csv(std::ostream& out, const RawDataset& raw, const std::string& label_column,
               char delimiter = ',');

/// Current version of the binary ensemble format.
inline constexpr std::uint32_t kEnsembleFormatVersion = 1;

void save_ensemble(const EnsembleModel& ens, const std::filesystem::path& path);
/// Throws FormatError on bad magic, version mismatch, truncation, checksum
/// failure or any model that violates its invariants.
EnsembleModel load_ensemble(const std::filesystem::path& path);

std::string encode_ensemble(const EnsembleModel& ens);
EnsembleModel decode_ensemble(const std::string& bytes);

/// Settings a run reads from a key = value file.
struct RunConfig {
  EnsembleConfig ensemble;
  std::size_t folds = 5;
  std::optional<double> threshold;
  std::string label_column = "label";
};

/// Applies every `key = value` line in `in` on top of `base`. Blank lines and
/// `#` comments are skipped; unknown keys throw ArgumentError.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

}  // namespace hgc
