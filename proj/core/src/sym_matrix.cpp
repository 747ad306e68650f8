#include "glrank/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "glrank/errors.hpp"

namespace glrank {

SymMatrix SymMatrix::identity(std::size_t p) {
  SymMatrix m(p);
  for (std::size_t i = 0; i < p; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  SymMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

SymMatrix SymMatrix::from_eigen(const Eigen::MatrixXd& m, double sym_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: matrix is not square");
  const auto p = static_cast<std::size_t>(m.rows());
  SymMatrix s(p);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double a = m(i, j), b = m(j, i);
      if (std::abs(a - b) > sym_tol * std::max({1.0, std::abs(a), std::abs(b)})) {
        throw std::invalid_argument("SymMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                    ") differ beyond tolerance");
      }
      s.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), a);
    }
  }
  return s;
}

SymMatrix SymMatrix::symmetrized(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: matrix is not square");
  SymMatrix s(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      s.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), 0.5 * (m(i, j) + m(j, i)));
  return s;
}

Eigen::MatrixXd SymMatrix::to_eigen() const {
  Eigen::MatrixXd m(p_, p_);
  for (std::size_t i = 0; i < p_; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = (*this)(i, j);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  return m;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < p_; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = (*this)(i, j);
      s += (i == j ? 1.0 : 2.0) * v * v;
    }
  return std::sqrt(s);
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool SymMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

EigenDecomposition symmetric_eig(const Eigen::MatrixXd& a) {
  if (!a.allFinite()) throw DomainError("symmetric_eig: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw DomainError("symmetric_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenDecomposition symmetric_eig(const SymMatrix& a) { return symmetric_eig(a.to_eigen()); }

std::size_t numeric_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double cut = tol * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > cut) ++r;
  return r;
}

bool general_position(const SymMatrix& a, double tol, std::size_t max_order) {
  const std::size_t p = a.order();
  if (p > max_order || p > 30) {
    throw BudgetExceeded("general_position: p=" + std::to_string(p) + " exceeds budget p<=" +
                         std::to_string(max_order));
  }
  const Eigen::MatrixXd full = a.to_eigen();
  const std::size_t r = numeric_rank(full, tol);
  std::vector<Eigen::Index> idx;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << p); ++s) {
    idx.clear();
    for (std::size_t i = 0; i < p; ++i)
      if (s >> i & 1U) idx.push_back(static_cast<Eigen::Index>(i));
    const Eigen::MatrixXd sub = full(idx, idx);
    if (numeric_rank(sub, tol) != std::min(idx.size(), r)) return false;
  }
  return true;
}

bool is_psd(const SymMatrix& a, double tol) {
  if (a.order() == 0) return true;
  const auto eig = symmetric_eig(a);
  const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  return eig.values(0) >= -tol * scale;
}

}  // namespace glrank
