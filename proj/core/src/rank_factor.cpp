#include "glrank/rank_factor.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "glrank/echelon.hpp"
#include "glrank/errors.hpp"

namespace glrank {

RankFactor::RankFactor(QMatrix x, QVector weights) : x_(std::move(x)), w_(std::move(weights)) {
  if (w_.size() != x_.rows()) throw std::invalid_argument("RankFactor: one weight per row required");
  for (const auto& w : w_)
    if (sgn(w) <= 0) throw std::invalid_argument("RankFactor: weights must be positive");
}

RankFactor RankFactor::from_rows(QMatrix x) {
  QVector w(x.rows(), Rational(1));
  return RankFactor(std::move(x), std::move(w));
}

RankFactor RankFactor::from_data(QMatrix data) {
  if (data.rows() == 0) throw std::invalid_argument("RankFactor::from_data: no observations");
  QVector w(data.rows(), Rational(1, data.rows()));
  return RankFactor(std::move(data), std::move(w));
}

RankFactor RankFactor::from_psd(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("RankFactor::from_psd: matrix is not square");
  if (!a.is_symmetric()) throw DomainError("RankFactor::from_psd: matrix is not symmetric");
  const std::size_t p = a.rows();
  QMatrix w = a;
  std::vector<QVector> rows;
  QVector weights;
  std::vector<char> used(p, 0);
  while (true) {
    std::size_t piv = p;
    for (std::size_t i = 0; i < p; ++i) {
      if (used[i]) continue;
      if (sgn(w(i, i)) < 0) throw DomainError("matrix is not positive semidefinite");
      if (sgn(w(i, i)) > 0 && piv == p) piv = i;
    }
    if (piv == p) break;
    used[piv] = 1;
    const Rational d = w(piv, piv);
    QVector l(p);
    for (std::size_t j = 0; j < p; ++j) l[j] = w(piv, j) / d;
    for (std::size_t i = 0; i < p; ++i) {
      if (sgn(l[i]) == 0) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (sgn(l[j]) != 0) w(i, j) -= d * l[i] * l[j];
    }
    rows.push_back(std::move(l));
    weights.push_back(d);
  }
  // A zero diagonal in a PSD matrix forces its whole row to vanish.
  if (!w.is_zero()) throw DomainError("matrix is not positive semidefinite");
  return RankFactor(QMatrix::from_rows(rows, p), std::move(weights));
}

RankFactor RankFactor::zero(std::size_t p) { return RankFactor(QMatrix(0, p), {}); }

std::size_t RankFactor::rank() const { return glrank::rank(x_); }

QMatrix RankFactor::gram() const {
  const std::size_t p = order();
  QMatrix a(p, p);
  for (std::size_t k = 0; k < rows(); ++k)
    for (std::size_t i = 0; i < p; ++i) {
      if (sgn(x_(k, i)) == 0) continue;
      const Rational wi = w_[k] * x_(k, i);
      for (std::size_t j = 0; j < p; ++j)
        if (sgn(x_(k, j)) != 0) a(i, j) += wi * x_(k, j);
    }
  return a;
}

SymMatrix RankFactor::to_sym() const {
  const std::size_t p = order();
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(p));
  Eigen::VectorXd w(static_cast<Eigen::Index>(rows()));
  for (std::size_t k = 0; k < rows(); ++k) {
    w(static_cast<Eigen::Index>(k)) = w_[k].get_d();
    for (std::size_t j = 0; j < p; ++j)
      x(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = x_(k, j).get_d();
  }
  return SymMatrix::symmetrized(x.transpose() * w.asDiagonal() * x);
}

RankFactor RankFactor::stacked(const RankFactor& more) const {
  if (more.order() != order()) throw std::invalid_argument("RankFactor::stacked: order mismatch");
  QMatrix x(rows() + more.rows(), order());
  QVector w = w_;
  for (std::size_t k = 0; k < rows(); ++k)
    for (std::size_t j = 0; j < order(); ++j) x(k, j) = x_(k, j);
  for (std::size_t k = 0; k < more.rows(); ++k) {
    for (std::size_t j = 0; j < order(); ++j) x(rows() + k, j) = more.x_(k, j);
    w.push_back(more.w_[k]);
  }
  return RankFactor(std::move(x), std::move(w));
}

RankFactor random_integer_factor(std::size_t r, std::size_t p, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  QMatrix x(r, p);
  while (true) {
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < p; ++j) x(k, j) = dist(rng);
    bool zero_column = false;
    for (std::size_t j = 0; j < p && !zero_column; ++j) {
      bool all_zero = true;
      for (std::size_t k = 0; k < r && all_zero; ++k) all_zero = sgn(x(k, j)) == 0;
      zero_column = all_zero;
    }
    if (!zero_column || r == 0) break;
  }
  return RankFactor::from_rows(std::move(x));
}

bool general_position(const RankFactor& a, std::size_t max_order) {
  const std::size_t p = a.order();
  if (p > max_order || p > 30) {
    throw BudgetExceeded("general_position: p=" + std::to_string(p) + " exceeds budget p<=" + std::to_string(max_order));
  }
  const std::size_t r = a.rank();
  if (r == 0) return true;
  // Any larger column set contains r independent columns, and any smaller one sits inside
  // an independent r-set, so the r-subsets decide everything.
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << p); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != r) continue;
    std::vector<ZVector> rows(a.rows(), ZVector(r));
    for (std::size_t k = 0; k < a.rows(); ++k) {
      QVector row(r);
      for (std::size_t i = 0, c = 0; i < p; ++i)
        if (s >> i & 1U) row[c++] = a.x()(k, i);
      rows[k] = primitive_integer_row(row);
    }
    if (modular_rank(rows, r) == r) continue;
    QMatrix sub(a.rows(), r);
    for (std::size_t k = 0; k < a.rows(); ++k)
      for (std::size_t c = 0; c < r; ++c) sub(k, c) = Rational(rows[k][c]);
    if (rank(sub) < r) return false;
  }
  return true;
}

RankFactor rationalize_data(const Eigen::MatrixXd& data) {
  QMatrix x(static_cast<std::size_t>(data.rows()), static_cast<std::size_t>(data.cols()));
  for (Eigen::Index i = 0; i < data.rows(); ++i)
    for (Eigen::Index j = 0; j < data.cols(); ++j)
      x(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = from_double(data(i, j));
  return RankFactor::from_data(std::move(x));
}

}  // namespace glrank
