#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "glrank/qmatrix.hpp"

namespace glrank {

struct LpResult {
  bool feasible = false;
  /// A point satisfying every constraint exactly; present iff feasible.
  std::optional<QVector> point;
  std::size_t pivots = 0;
};

/// Decides whether {x : E x = f, x_i >= 0 for i in nonneg} is nonempty.
/// Exact phase-one simplex with Bland's rule, so it always terminates.
LpResult lp_feasible(const QMatrix& e, const QVector& f, const std::vector<std::size_t>& nonneg);

}  // namespace glrank
