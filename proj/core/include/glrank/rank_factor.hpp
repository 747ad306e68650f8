#pragma once

#include <cstddef>
#include <random>

#include <Eigen/Dense>

#include "glrank/qmatrix.hpp"
#include "glrank/sym_matrix.hpp"

namespace glrank {

/// Exact factor of a PSD matrix: A = X^T diag(w) X with every weight w_k > 0.
/// Positive weights mean ker(A) = ker(X), which is all the certifiers look at.
class RankFactor {
 public:
  RankFactor() = default;
  /// Throws std::invalid_argument on a size mismatch or a non-positive weight.
  RankFactor(QMatrix x, QVector weights);

  /// Unit weights: A = X^T X.
  static RankFactor from_rows(QMatrix x);
  /// Data matrix (n x p): A = (1/n) X^T X.
  static RankFactor from_data(QMatrix data);
  /// Exact symmetric-pivoting LDL^T. Throws DomainError when a is not exactly PSD.
  static RankFactor from_psd(const QMatrix& a);
  /// The zero matrix on p variables (no rows).
  static RankFactor zero(std::size_t p);

  std::size_t order() const noexcept { return x_.cols(); }
  std::size_t rows() const noexcept { return x_.rows(); }
  const QMatrix& x() const noexcept { return x_; }
  const QVector& weights() const noexcept { return w_; }

  /// Exact rank of A (= rank of X).
  std::size_t rank() const;
  QMatrix gram() const;
  SymMatrix to_sym() const;
  /// Rows stacked onto this factor (same p); used for PSD-order monotonicity.
  RankFactor stacked(const RankFactor& more) const;

 private:
  QMatrix x_;
  QVector w_;
};

/// Exact general-position test: every principal q x q submatrix of A has rank min(q, rank A).
/// Equivalent to every rank(A) columns of X being independent. Throws BudgetExceeded when
/// order() > max_order.
bool general_position(const RankFactor& a, std::size_t max_order = kGeneralPositionMaxOrder);

// Wide enough that measure-zero coincidences (parallel columns, vanishing minors) have
// probability around 1e-6 per draw; with [-100, 100] they showed up in ~0.1% of draws.
inline constexpr long kRandomEntryBound = 1L << 20;

/// r x p integers uniform on [-bound, bound]; redraws while any column is all zero.
RankFactor random_integer_factor(std::size_t r, std::size_t p, std::mt19937_64& rng,
                                 long bound = kRandomEntryBound);

/// Snaps each double of the n x p data matrix to its exact rational value; A = (1/n) X^T X.
RankFactor rationalize_data(const Eigen::MatrixXd& data);

}  // namespace glrank
