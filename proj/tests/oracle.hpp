#pragma once

// Test-only reference computations. These follow the textbook definitions
// with explicit sets and full dense arrays and share no code with the
// sparse model path.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "hgc/combinatorics.hpp"
#include "hgc/model.hpp"
#include "hgc/random.hpp"

namespace oracle {

/// Units in the intersection of the cells {i : d[i][features[q]] == intervals[q]}.
inline std::set<std::size_t> intersection(const hgc::DiscretizedDataset& d,
                                          const std::vector<int>& features,
                                          const std::vector<int>& intervals) {
  std::set<std::size_t> units;
  for (std::size_t i = 0; i < d.n; ++i) units.insert(i);
  for (std::size_t q = 0; q < features.size(); ++q) {
    std::set<std::size_t> cell;
    for (std::size_t i = 0; i < d.n; ++i) {
      if (d.at(i, static_cast<std::size_t>(features[q])) == intervals[q]) cell.insert(i);
    }
    std::set<std::size_t> kept;
    for (auto i : units) {
      if (cell.count(i)) kept.insert(i);
    }
    units = kept;
  }
  return units;
}

/// Every interval tuple in [t_min, t_max]^eta, first entry most significant.
inline std::vector<std::vector<int>> interval_tuples(int eta, int t_min, int t_max) {
  std::vector<std::vector<int>> out{{}};
  for (int q = 0; q < eta; ++q) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out) {
      for (int t = t_min; t <= t_max; ++t) {
        auto p = prefix;
        p.push_back(t);
        next.push_back(p);
      }
    }
    out = next;
  }
  return out;
}

/// Dense hyperedge list in column order: feature combinations
/// lexicographic, interval tuples lexicographic within a combination.
inline std::vector<hgc::HyperedgeKey> column_keys(std::size_t m, int eta, int t_min, int t_max) {
  std::vector<hgc::HyperedgeKey> keys;
  for (const auto& combo : hgc::combinations(static_cast<int>(m), eta)) {
    for (const auto& tuple : interval_tuples(eta, t_min, t_max)) keys.push_back({combo, tuple});
  }
  return keys;
}

/// Incidence matrix of the eta-intersection hypergraph from explicit set intersections.
inline hgc::DenseMatrix intersection_incidence(const hgc::DiscretizedDataset& d, int eta) {
  const auto keys = column_keys(d.m, eta, d.t_min, d.t_max);
  hgc::DenseMatrix b(d.n, keys.size());
  for (std::size_t y = 0; y < keys.size(); ++y) {
    for (auto i : intersection(d, keys[y].features, keys[y].intervals)) b(i, y) = 1.0;
  }
  return b;
}

/// Class proportion per column, row-normalized, uniform for empty columns.
inline hgc::DenseMatrix dense_weights(const hgc::DenseMatrix& incidence,
                                      const std::vector<int>& labels, std::size_t c) {
  std::vector<double> sizes(c, 0.0);
  for (int l : labels) sizes[static_cast<std::size_t>(l)] += 1.0;
  hgc::DenseMatrix w(incidence.cols(), c);
  for (std::size_t y = 0; y < incidence.cols(); ++y) {
    std::vector<double> counts(c, 0.0);
    for (std::size_t i = 0; i < incidence.rows(); ++i) {
      counts[static_cast<std::size_t>(labels[i])] += incidence(i, y);
    }
    double total = 0.0;
    for (std::size_t k = 0; k < c; ++k) {
      counts[k] /= sizes[k];
      total += counts[k];
    }
    for (std::size_t k = 0; k < c; ++k) w(y, k) = total == 0.0 ? 1.0 / c : counts[k] / total;
  }
  return w;
}

/// Column means of diag(nu) * W.
inline std::vector<double> dense_mean(const hgc::DenseMatrix& w, const std::vector<double>& nu) {
  std::vector<double> mean(w.cols(), 0.0);
  for (std::size_t y = 0; y < w.rows(); ++y) {
    for (std::size_t k = 0; k < w.cols(); ++k) mean[k] += nu[y] * w(y, k);
  }
  for (double& v : mean) v /= static_cast<double>(w.rows());
  return mean;
}

/// The random small instances used for sparse/dense agreement checks.
struct SmallInstance {
  hgc::DiscretizedDataset d;
  std::vector<int> labels;
  std::size_t classes = 0;
  int eta = 1;
};

inline SmallInstance random_instance(hgc::Rng& rng) {
  SmallInstance s;
  s.d.n = 2 + hgc::uniform_index(rng, 11);  // 2..12
  s.d.m = 1 + hgc::uniform_index(rng, 4);   // 1..4
  const int tau = 1 + static_cast<int>(hgc::uniform_index(rng, 3));
  const int base = static_cast<int>(hgc::uniform_index(rng, 7)) - 3;
  s.eta = 1 + static_cast<int>(hgc::uniform_index(rng, std::min<std::uint64_t>(3, s.d.m)));
  s.classes = 1 + hgc::uniform_index(rng, std::min<std::uint64_t>(3, s.d.n));
  for (std::size_t i = 0; i < s.d.n * s.d.m; ++i) {
    s.d.values.push_back(base + static_cast<int>(hgc::uniform_index(rng, static_cast<std::uint64_t>(tau))));
  }
  s.d.t_min = *std::min_element(s.d.values.begin(), s.d.values.end());
  s.d.t_max = *std::max_element(s.d.values.begin(), s.d.values.end());
  for (std::size_t i = 0; i < s.d.n; ++i) {
    s.labels.push_back(i < s.classes ? static_cast<int>(i)
                                     : static_cast<int>(hgc::uniform_index(rng, s.classes)));
  }
  return s;
}

/// Scores that discretize to exactly `d` under length 1, origin 0.
inline hgc::DenseMatrix scores_for(const hgc::DiscretizedDataset& d) {
  hgc::DenseMatrix z(d.n, d.m);
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.m; ++j) z(i, j) = d.at(i, j) - 0.5;
  }
  return z;
}

}  // namespace oracle
