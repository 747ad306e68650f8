#pragma once

// Shared between the certifiers; not installed.

#include "glrank/certify.hpp"

namespace glrank::detail {

/// Echelon form of the X Omega = 0 system on S_G coordinates, plus a flag telling whether
/// the modular fast path already proved the kernel trivial (then `echelon` is empty).
struct PseudoSystem {
  std::size_t edges = 0;
  std::size_t p = 0;
  bool trivial = false;
  IntegerEchelon echelon{0};
};

PseudoSystem reduce_pseudo_system(const Graph& g, const RankFactor& a);

/// Rescales to a primitive integer vector (same direction).
QVector primitive(const QVector& v);

}  // namespace glrank::detail
