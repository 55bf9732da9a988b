#pragma once

// Dense block-matrix algebra: face products and restricted face powers.
//
// Everything here materializes full matrices and is meant for small
// instances. Model construction uses the sparse equivalent in model.hpp;
// this module is the reference it is checked against.

#include <cstddef>
#include <span>
#include <vector>

namespace hgc {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Row-major entries; throws DimensionError unless entries.size() == rows * cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  /// Nested initializer, one inner list per row. Ragged rows are rejected.
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  const std::vector<double>& entries() const { return data_; }

  /// Copy of columns [first, first + count).
  DenseMatrix column_slice(std::size_t first, std::size_t count) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// A matrix whose columns are partitioned into consecutive blocks.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  /// Throws ArgumentError if a width is zero or the widths do not sum to matrix.cols().
  BlockMatrix(DenseMatrix matrix, std::vector<std::size_t> block_widths);
  /// Splits into `blocks` blocks of identical width.
  static BlockMatrix uniform(DenseMatrix matrix, std::size_t blocks);

  const DenseMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& block_widths() const { return widths_; }
  std::size_t block_count() const { return widths_.size(); }
  std::size_t block_offset(std::size_t block) const;
  DenseMatrix block(std::size_t index) const;

  bool operator==(const BlockMatrix&) const = default;

 private:
  DenseMatrix matrix_;
  std::vector<std::size_t> widths_;
};

/// Row-wise pairing of columns: column (ja, jb) of the result sits at
/// ja * b.cols() + jb and holds a(i, ja) * b(i, jb).
DenseMatrix face_product(const DenseMatrix& a, const DenseMatrix& b);

/// Left fold of face_product over a non-empty list.
DenseMatrix face_product_chain(std::span<const DenseMatrix> ms);

/// Face-product chains over every increasing n-subset of blocks, subsets in
/// lexicographic order. Each chain becomes one output block.
BlockMatrix restricted_face_power(const BlockMatrix& a, std::size_t n);

}  // namespace hgc
