#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "glrank/qmatrix.hpp"

namespace glrank {

/// Incremental fraction-free row echelon form over the integers.
///
/// Rows are kept primitive (content 1) with a positive pivot and sorted by pivot column,
/// so inserting a new row reduces it against the basis in one pass. This is the "reduce"
/// step used when constraint blocks are added one at a time.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the basis; keeps it when independent. Returns true iff rank grew.
  bool insert(ZVector v);
  bool insert(const QVector& v) { return insert(primitive_integer_row(v)); }

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t nullity() const noexcept { return cols_ - rows_.size(); }
  const std::vector<ZVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_pivot(std::size_t col) const;

  /// Given x with its non-pivot coordinates set, overwrites the pivot coordinates so that
  /// every basis row annihilates x.
  void back_substitute(QVector& x) const;

  /// One kernel vector per free column (unit in that column), in column order.
  std::vector<QVector> kernel() const;

 private:
  std::size_t cols_;
  std::vector<ZVector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const QMatrix& m);
/// Basis of the right kernel; empty iff m has full column rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Rank modulo the Mersenne prime 2^61-1. Never exceeds the rational rank, so a full
/// column rank result here proves full column rank over Q.
std::size_t modular_rank(const std::vector<ZVector>& rows, std::size_t cols);

}  // namespace glrank
