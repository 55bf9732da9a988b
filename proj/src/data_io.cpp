#include "hgc/data_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace hgc {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(first, last - first + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    out.push_back(trim(std::string_view(line).substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r\n") == std::string::npos; }

std::optional<double> parse_number(const std::string& cell) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table read_table(std::istream& in, char delimiter) {
  Table table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    auto cells = split(line, delimiter);
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw CsvError(CsvError::Kind::Ragged,
                     "row " + std::to_string(table.rows.size() + 1) + " has " +
                         std::to_string(cells.size()) + " cells, header has " +
                         std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  if (!have_header) throw CsvError(CsvError::Kind::Empty, "table has no header row");
  if (table.rows.empty()) throw CsvError(CsvError::Kind::Empty, "table has no data rows");
  return table;
}

double numeric_cell(const Table& t, std::size_t row, std::size_t col) {
  const auto v = parse_number(t.rows[row][col]);
  if (!v) {
    throw CsvError(CsvError::Kind::NonNumeric,
                   "non-numeric value '" + t.rows[row][col] + "' at row " +
                       std::to_string(row + 1) + ", column '" + t.header[col] + "'");
  }
  return *v;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

// ---- binary ensemble format -------------------------------------------------

constexpr char kMagic[8] = {'H', 'G', 'C', 'E', 'N', 'S', 'M', 'B'};

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Writer {
 public:
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void i32(std::int32_t v) { put(static_cast<std::uint32_t>(v), 4); }
  void f64(double v) { put(std::bit_cast<std::uint64_t>(v), 8); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    buf_ += s;
  }
  void raw(std::string_view s) { buf_ += s; }
  std::string& bytes() { return buf_; }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string buf_;
};

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::int32_t i32() { return static_cast<std::int32_t>(static_cast<std::uint32_t>(get(4))); }
  double f64() { return std::bit_cast<double>(get(8)); }
  std::string str() {
    const std::uint32_t n = u32();
    need(n);
    std::string s(bytes_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::string_view take(std::size_t n) {
    need(n);
    auto s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  /// Guards allocations: `count` items of at least `item_bytes` each must fit.
  void expect_items(std::uint64_t count, std::size_t item_bytes) const {
    if (item_bytes != 0 && count > remaining() / item_bytes) {
      throw FormatError("ensemble file truncated");
    }
  }
  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (remaining() < n) throw FormatError("ensemble file truncated");
  }
  std::uint64_t get(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += static_cast<std::size_t>(n);
    return v;
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RawDataset parse_csv(std::istream& in, const std::string& label_column, char delimiter) {
  const Table t = read_table(in, delimiter);
  const auto label_it = std::find(t.header.begin(), t.header.end(), label_column);
  if (label_it == t.header.end()) {
    throw CsvError(CsvError::Kind::MissingColumn,
                   "label column '" + label_column + "' not found in header");
  }
  const auto label_col = static_cast<std::size_t>(label_it - t.header.begin());

  RawDataset raw;
  raw.n = t.rows.size();
  raw.m = t.header.size() - 1;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (c != label_col) raw.feature_names.push_back(t.header[c]);
  }
  std::map<std::string, int> label_index;
  raw.values.reserve(raw.n * raw.m);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.header.size(); ++c) {
      if (c == label_col) continue;
      raw.values.push_back(numeric_cell(t, r, c));
    }
    const auto& name = t.rows[r][label_col];
    auto [it, inserted] = label_index.try_emplace(name, static_cast<int>(raw.label_names.size()));
    if (inserted) raw.label_names.push_back(name);
    raw.labels.push_back(it->second);
  }
  return raw;
}

RawDataset load_csv(const std::filesystem::path& path, const std::string& label_column,
                    char delimiter) {
  auto in = open_input(path);
  return parse_csv(in, label_column, delimiter);
}

RawDataset load_units(const std::filesystem::path& path,
                      const std::vector<std::string>& feature_names,
                      const std::optional<std::string>& label_column, char delimiter) {
  auto in = open_input(path);
  const Table t = read_table(in, delimiter);
  std::vector<std::size_t> columns;
  for (const auto& name : feature_names) {
    const auto it = std::find(t.header.begin(), t.header.end(), name);
    if (it == t.header.end()) {
      throw CsvError(CsvError::Kind::MissingColumn,
                     "feature column '" + name + "' not found in header");
    }
    columns.push_back(static_cast<std::size_t>(it - t.header.begin()));
  }
  std::optional<std::size_t> label_col;
  if (label_column) {
    const auto it = std::find(t.header.begin(), t.header.end(), *label_column);
    if (it != t.header.end()) label_col = static_cast<std::size_t>(it - t.header.begin());
  }
  RawDataset raw;
  raw.n = t.rows.size();
  raw.m = feature_names.size();
  raw.feature_names = feature_names;
  std::map<std::string, int> label_index;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (auto c : columns) raw.values.push_back(numeric_cell(t, r, c));
    if (label_col) {
      const auto& name = t.rows[r][*label_col];
      auto [it, inserted] =
          label_index.try_emplace(name, static_cast<int>(raw.label_names.size()));
      if (inserted) raw.label_names.push_back(name);
      raw.labels.push_back(it->second);
    } else {
      raw.labels.push_back(0);
    }
  }
  if (!label_col) raw.label_names = {"unknown"};
  return raw;
}

void write_csv(std::ostream& out, const RawDataset& raw, const std::string& label_column,
               char delimiter) {
  for (const auto& name : raw.feature_names) out << name << delimiter;
  out << label_column << '\n';
  const auto old_precision = out.precision(17);
  for (std::size_t i = 0; i < raw.n; ++i) {
    for (std::size_t j = 0; j < raw.m; ++j) out << raw.at(i, j) << delimiter;
    out << raw.label_names[static_cast<std::size_t>(raw.labels[i])] << '\n';
  }
  out.precision(old_precision);
}

std::string encode_ensemble(const EnsembleModel& ens) {
  Writer w;
  w.raw(std::string_view(kMagic, sizeof kMagic));
  w.u32(kEnsembleFormatVersion);
  const auto& cfg = ens.config;
  w.u32(static_cast<std::uint32_t>(cfg.eta));
  w.u32(static_cast<std::uint32_t>(cfg.lengths));
  w.u32(static_cast<std::uint32_t>(cfg.origins));
  w.f64(cfg.length_min);
  w.f64(cfg.length_max);
  w.f64(cfg.origin_min);
  w.f64(cfg.origin_max);
  w.u64(cfg.seed);
  w.u32(static_cast<std::uint32_t>(ens.feature_names.size()));
  for (const auto& s : ens.feature_names) w.str(s);
  w.u32(static_cast<std::uint32_t>(ens.label_names.size()));
  for (const auto& s : ens.label_names) w.str(s);
  w.u64(ens.models.size());
  for (const auto& model : ens.models) {
    w.f64(model.params().length);
    w.f64(model.params().origin);
    for (double v : model.stats().mean) w.f64(v);
    for (double v : model.stats().stddev) w.f64(v);
    w.i32(model.t_min());
    w.i32(model.t_max());
    for (auto s : model.class_sizes()) w.u64(s);
    const WeightMap weights = model.weights();
    w.u64(weights.size());
    for (const auto& [key, row] : weights) {
      for (int f : key.features) w.i32(f);
      for (int t : key.intervals) w.i32(t);
      for (double v : row) w.f64(v);
    }
  }
  const std::uint64_t checksum = fnv1a(w.bytes());
  w.u64(checksum);
  return std::move(w.bytes());
}

EnsembleModel decode_ensemble(const std::string& bytes) {
  Reader r(bytes);
  if (bytes.size() < sizeof kMagic ||
      std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw FormatError("not an ensemble file (bad magic)");
  }
  r.take(sizeof kMagic);
  const std::uint32_t version = r.u32();
  if (version != kEnsembleFormatVersion) {
    throw FormatError("unsupported ensemble format version " + std::to_string(version) +
                      " (expected " + std::to_string(kEnsembleFormatVersion) + ")");
  }

  EnsembleModel ens;
  auto& cfg = ens.config;
  cfg.eta = static_cast<int>(r.u32());
  cfg.lengths = static_cast<int>(r.u32());
  cfg.origins = static_cast<int>(r.u32());
  cfg.length_min = r.f64();
  cfg.length_max = r.f64();
  cfg.origin_min = r.f64();
  cfg.origin_max = r.f64();
  cfg.seed = r.u64();
  const std::uint32_t m = r.u32();
  r.expect_items(m, 4);
  for (std::uint32_t j = 0; j < m; ++j) ens.feature_names.push_back(r.str());
  const std::uint32_t c = r.u32();
  r.expect_items(c, 4);
  for (std::uint32_t k = 0; k < c; ++k) ens.label_names.push_back(r.str());
  const std::uint64_t count = r.u64();
  r.expect_items(count, 16 + 16 * static_cast<std::size_t>(m) + 8 + 8 * c + 8);

  const auto eta = static_cast<std::size_t>(cfg.eta);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PartitionParams params;
    params.length = r.f64();
    params.origin = r.f64();
    FeatureStats stats;
    for (std::uint32_t j = 0; j < m; ++j) stats.mean.push_back(r.f64());
    for (std::uint32_t j = 0; j < m; ++j) stats.stddev.push_back(r.f64());
    const int t_min = r.i32();
    const int t_max = r.i32();
    std::vector<std::size_t> sizes;
    for (std::uint32_t k = 0; k < c; ++k) sizes.push_back(static_cast<std::size_t>(r.u64()));
    const std::uint64_t entries = r.u64();
    r.expect_items(entries, 8 * eta + 8 * c);
    WeightMap weights;
    for (std::uint64_t e = 0; e < entries; ++e) {
      HyperedgeKey key;
      for (std::size_t i = 0; i < eta; ++i) key.features.push_back(r.i32());
      for (std::size_t i = 0; i < eta; ++i) key.intervals.push_back(r.i32());
      std::vector<double> row;
      for (std::uint32_t k = 0; k < c; ++k) row.push_back(r.f64());
      if (!weights.emplace(std::move(key), std::move(row)).second) {
        throw FormatError("model " + std::to_string(idx + 1) + " repeats a hyperedge");
      }
    }
    try {
      ens.models.push_back(HypergraphModel::from_weights(cfg.eta, params, std::move(stats), t_min,
                                                         t_max, std::move(sizes), weights));
    } catch (const std::exception& e) {
      throw FormatError("model " + std::to_string(idx + 1) + " is invalid: " + e.what());
    }
  }
  const std::size_t payload_end = r.position();
  if (r.remaining() < 8) throw FormatError("ensemble file truncated");
  const std::uint64_t stored = r.u64();
  if (r.remaining() != 0) throw FormatError("trailing bytes after ensemble checksum");
  if (stored != fnv1a(std::string_view(bytes).substr(0, payload_end))) {
    throw FormatError("ensemble checksum mismatch");
  }
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw FormatError(std::string("ensemble configuration is invalid: ") + e.what());
  }
  if (ens.models.size() != cfg.population()) {
    throw FormatError("ensemble holds " + std::to_string(ens.models.size()) +
                      " models, configuration declares " + std::to_string(cfg.population()));
  }
  return ens;
}

void save_ensemble(const EnsembleModel& ens, const std::filesystem::path& path) {
  const std::string bytes = encode_ensemble(ens);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

EnsembleModel load_ensemble(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return decode_ensemble(ss.str());
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (blank(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ArgumentError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    auto number = [&]() {
      const auto v = parse_number(value);
      if (!v) {
        throw ArgumentError("config line " + std::to_string(line_no) + ": '" + value +
                            "' is not a number");
      }
      return *v;
    };
    auto integer = [&]() {
      const double v = number();
      if (v != std::floor(v) || v < 0) {
        throw ArgumentError("config line " + std::to_string(line_no) + ": '" + value +
                            "' is not a non-negative integer");
      }
      return v;
    };
    auto& e = base.ensemble;
    if (key == "eta") {
      e.eta = static_cast<int>(integer());
    } else if (key == "lengths") {
      e.lengths = static_cast<int>(integer());
    } else if (key == "origins") {
      e.origins = static_cast<int>(integer());
    } else if (key == "length_min") {
      e.length_min = number();
    } else if (key == "length_max") {
      e.length_max = number();
    } else if (key == "origin_min") {
      e.origin_min = number();
    } else if (key == "origin_max") {
      e.origin_max = number();
    } else if (key == "seed") {
      std::uint64_t seed = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ArgumentError("config line " + std::to_string(line_no) + ": bad seed '" + value + "'");
      }
      e.seed = seed;
    } else if (key == "folds") {
      base.folds = static_cast<std::size_t>(integer());
    } else if (key == "threshold") {
      base.threshold = number();
    } else if (key == "label") {
      base.label_column = value;
    } else {
      throw ArgumentError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  auto in = open_input(path);
  return parse_config(in, std::move(base));
}

}  // namespace hgc
