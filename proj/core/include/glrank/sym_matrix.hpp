#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace glrank {

/// Dense symmetric matrix of doubles; each off-diagonal pair is stored once
/// (packed lower triangle), so symmetry holds by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t p) : p_(p), data_(p * (p + 1) / 2, 0.0) {}

  static SymMatrix identity(std::size_t p);
  static SymMatrix diagonal(const std::vector<double>& d);
  /// Throws std::invalid_argument unless m is square and symmetric to within
  /// sym_tol * max(1, |m_ij|).
  static SymMatrix from_eigen(const Eigen::MatrixXd& m, double sym_tol = 1e-12);
  /// Averages m with its transpose; no check.
  static SymMatrix symmetrized(const Eigen::MatrixXd& m);

  std::size_t order() const noexcept { return p_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  double& at(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) { data_[index(i, j)] = v; }

  Eigen::MatrixXd to_eigen() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t p_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns
};

/// Throws DomainError on non-finite input or solver failure.
EigenDecomposition symmetric_eig(const SymMatrix& a);
EigenDecomposition symmetric_eig(const Eigen::MatrixXd& a);

inline constexpr double kRankTolerance = 1e-8;
inline constexpr std::size_t kGeneralPositionMaxOrder = 12;

/// Number of singular values above tol * max(1, sigma_max).
std::size_t numeric_rank(const Eigen::MatrixXd& m, double tol = kRankTolerance);

/// Every q x q principal submatrix has rank min(q, rank(a)). Enumerates all 2^p subsets;
/// throws BudgetExceeded when a.order() > max_order.
bool general_position(const SymMatrix& a, double tol = kRankTolerance,
                      std::size_t max_order = kGeneralPositionMaxOrder);

/// Smallest eigenvalue >= -tol * max(1, |lambda|_max).
bool is_psd(const SymMatrix& a, double tol = 1e-10);

}  // namespace glrank
