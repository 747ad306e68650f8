#include "glrank/lp.hpp"

#include <stdexcept>

namespace glrank {

LpResult lp_feasible(const QMatrix& e, const QVector& f, const std::vector<std::size_t>& nonneg) {
  const std::size_t m = e.rows();
  const std::size_t n = e.cols();
  if (f.size() != m) throw std::invalid_argument("lp_feasible: rhs length mismatch");
  std::vector<char> is_nonneg(n, 0);
  for (std::size_t i : nonneg) {
    if (i >= n) throw std::invalid_argument("lp_feasible: nonneg index out of range");
    is_nonneg[i] = 1;
  }

  // Free variables become u - w with u, w >= 0.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = structural++;
    if (!is_nonneg[j]) minus_col[j] = structural++;
  }
  const std::size_t total = structural + m;  // one artificial per row
  const std::size_t rhs = total;

  std::vector<QVector> t(m, QVector(total + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(f[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(e(i, j)) == 0) continue;
      Rational v = flip ? Rational(-e(i, j)) : e(i, j);
      t[i][plus_col[j]] = v;
      if (minus_col[j] != SIZE_MAX) t[i][minus_col[j]] = -v;
    }
    t[i][structural + i] = 1;
    t[i][rhs] = flip ? Rational(-f[i]) : f[i];
    basis[i] = structural + i;
  }

  // Reduced costs of "minimise the sum of artificials".
  QVector cost(total + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= total; ++j)
      if (j < structural || j == rhs) cost[j] -= t[i][j];

  LpResult result;
  while (true) {
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == total) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leave == m) throw std::logic_error("lp_feasible: unbounded phase-one problem");

    const Rational piv = t[leave][enter];
    for (auto& v : t[leave])
      if (sgn(v) != 0) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j <= total; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= factor * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j <= total; ++j)
        if (sgn(t[leave][j]) != 0) cost[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  // cost[rhs] holds minus the phase-one objective.
  if (sgn(cost[rhs]) != 0) return result;

  QVector y(structural);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < structural) y[basis[i]] = t[i][rhs];
  QVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = y[plus_col[j]];
    if (minus_col[j] != SIZE_MAX) x[j] -= y[minus_col[j]];
  }
  QVector check = e * x;
  for (std::size_t i = 0; i < m; ++i)
    if (check[i] != f[i]) throw std::logic_error("lp_feasible: certificate point violates an equality");
  for (std::size_t i : nonneg)
    if (sgn(x[i]) < 0) throw std::logic_error("lp_feasible: certificate point violates a sign constraint");
  result.feasible = true;
  result.point = std::move(x);
  return result;
}

}  // namespace glrank
