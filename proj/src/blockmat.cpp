#include "hgc/blockmat.hpp"

#include <numeric>
#include <string>

#include "hgc/combinatorics.hpp"
#include "hgc/errors.hpp"

namespace hgc {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged row in matrix literal");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(rows.size(), cols, std::move(entries));
}

DenseMatrix DenseMatrix::column_slice(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionError("column slice out of range");
  DenseMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  }
  return out;
}

BlockMatrix::BlockMatrix(DenseMatrix matrix, std::vector<std::size_t> block_widths)
    : matrix_(std::move(matrix)), widths_(std::move(block_widths)) {
  std::size_t total = 0;
  for (auto w : widths_) {
    if (w == 0) throw ArgumentError("block width must be at least 1");
    total += w;
  }
  if (total != matrix_.cols()) {
    throw ArgumentError("block widths sum to " + std::to_string(total) + " but matrix has " +
                        std::to_string(matrix_.cols()) + " columns");
  }
}

BlockMatrix BlockMatrix::uniform(DenseMatrix matrix, std::size_t blocks) {
  if (blocks == 0 || matrix.cols() % blocks != 0) {
    throw ArgumentError("cannot split " + std::to_string(matrix.cols()) + " columns into " +
                        std::to_string(blocks) + " equal blocks");
  }
  std::vector<std::size_t> widths(blocks, matrix.cols() / blocks);
  return BlockMatrix(std::move(matrix), std::move(widths));
}

std::size_t BlockMatrix::block_offset(std::size_t block) const {
  return std::accumulate(widths_.begin(), widths_.begin() + static_cast<std::ptrdiff_t>(block),
                         std::size_t{0});
}

DenseMatrix BlockMatrix::block(std::size_t index) const {
  if (index >= widths_.size()) throw ArgumentError("block index out of range");
  return matrix_.column_slice(block_offset(index), widths_[index]);
}

DenseMatrix face_product(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("face product needs equal row counts, got " +
                         std::to_string(a.rows()) + " and " + std::to_string(b.rows()));
  }
  DenseMatrix out(a.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    const auto ra = a.row(i);
    const auto rb = b.row(i);
    for (std::size_t ja = 0; ja < ra.size(); ++ja) {
      for (std::size_t jb = 0; jb < rb.size(); ++jb) dst[ja * rb.size() + jb] = ra[ja] * rb[jb];
    }
  }
  return out;
}

DenseMatrix face_product_chain(std::span<const DenseMatrix> ms) {
  if (ms.empty()) throw ArgumentError("face product chain of an empty list");
  DenseMatrix acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = face_product(acc, ms[i]);
  return acc;
}

BlockMatrix restricted_face_power(const BlockMatrix& a, std::size_t n) {
  const std::size_t p = a.block_count();
  if (n < 1 || n > p) {
    throw ArgumentError("restricted face power order " + std::to_string(n) +
                        " outside [1, " + std::to_string(p) + "]");
  }
  if (n == 1) return a;

  std::vector<DenseMatrix> blocks;
  blocks.reserve(p);
  for (std::size_t b = 0; b < p; ++b) blocks.push_back(a.block(b));

  std::vector<DenseMatrix> chains;
  std::vector<std::size_t> widths;
  std::size_t total_cols = 0;
  for (const auto& combo : combinations(static_cast<int>(p), static_cast<int>(n))) {
    std::vector<DenseMatrix> chosen;
    chosen.reserve(n);
    for (int b : combo) chosen.push_back(blocks[static_cast<std::size_t>(b)]);
    chains.push_back(face_product_chain(chosen));
    widths.push_back(chains.back().cols());
    total_cols += widths.back();
  }

  const std::size_t rows = a.matrix().rows();
  DenseMatrix out(rows, total_cols);
  std::size_t offset = 0;
  for (const auto& chain : chains) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < chain.cols(); ++c) out(r, offset + c) = chain(r, c);
    }
    offset += chain.cols();
  }
  return BlockMatrix(std::move(out), std::move(widths));
}

}  // namespace hgc
