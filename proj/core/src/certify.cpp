#include "glrank/certify.hpp"

#include <stdexcept>

#include "glrank/errors.hpp"
#include "glrank/lp.hpp"
#include "pseudo_system.hpp"

namespace glrank {

std::size_t sym_dim(const Graph& g) { return g.size() + g.order(); }

QMatrix coords_to_matrix(const Graph& g, const QVector& coords) {
  if (coords.size() != sym_dim(g)) throw std::invalid_argument("coords_to_matrix: wrong coordinate count");
  const std::size_t ne = g.size();
  QMatrix m(g.order(), g.order());
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& ed = g.edges()[e];
    m(ed.u, ed.v) = coords[e];
    m(ed.v, ed.u) = coords[e];
  }
  for (std::size_t i = 0; i < g.order(); ++i) m(i, i) = coords[ne + i];
  return m;
}

QVector matrix_to_coords(const Graph& g, const QMatrix& m) {
  if (m.rows() != g.order() || m.cols() != g.order()) throw std::invalid_argument("matrix_to_coords: wrong size");
  if (!m.is_symmetric()) throw std::invalid_argument("matrix_to_coords: matrix is not symmetric");
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (sgn(m(i, j)) != 0 && !g.adjacent(i, j))
        throw std::invalid_argument("matrix_to_coords: entry outside the graph pattern");
  QVector c(sym_dim(g));
  for (std::size_t e = 0; e < g.size(); ++e) c[e] = m(g.edges()[e].u, g.edges()[e].v);
  for (std::size_t i = 0; i < g.order(); ++i) c[g.size() + i] = m(i, i);
  return c;
}

std::vector<ZVector> pseudo_equations(const Graph& g, const RankFactor& a) {
  if (a.order() != g.order()) throw std::invalid_argument("pseudo_equations: factor and graph differ in p");
  const std::size_t p = g.order();
  const std::size_t ne = g.size();
  std::vector<ZVector> eqs;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    ZVector x = primitive_integer_row(a.x().row(k));
    bool zero = true;
    for (const auto& z : x) zero = zero && sgn(z) == 0;
    if (zero) continue;
    // (X Omega)_{k,i} = x_i omega_ii + sum_{j ~ i} x_j omega_ij
    for (std::size_t i = 0; i < p; ++i) {
      ZVector row(ne + p);
      row[ne + i] = x[i];
      bool any = sgn(x[i]) != 0;
      for (std::size_t j : g.neighbors(i)) {
        if (sgn(x[j]) == 0) continue;
        row[*g.edge_index(i, j)] = x[j];
        any = true;
      }
      if (any) eqs.push_back(std::move(row));
    }
  }
  return eqs;
}

namespace detail {

PseudoSystem reduce_pseudo_system(const Graph& g, const RankFactor& a) {
  PseudoSystem sys;
  sys.edges = g.size();
  sys.p = g.order();
  const std::size_t n = sym_dim(g);
  auto eqs = pseudo_equations(g, a);
  if (eqs.size() >= n && modular_rank(eqs, n) == n) {
    sys.trivial = true;
    return sys;
  }
  sys.echelon = IntegerEchelon(n);
  for (auto& eq : eqs) {
    sys.echelon.insert(std::move(eq));
    if (sys.echelon.rank() == n) break;
  }
  sys.trivial = sys.echelon.rank() == n;
  return sys;
}

QVector primitive(const QVector& v) {
  ZVector z = primitive_integer_row(v);
  QVector out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i];
  return out;
}

}  // namespace detail

SubspaceBasis pseudo_kernel(const Graph& g, const RankFactor& a) {
  SubspaceBasis out;
  out.p = g.order();
  auto sys = detail::reduce_pseudo_system(g, a);
  if (sys.trivial) return out;
  std::size_t offdiag_pivots = 0;
  for (std::size_t c : sys.echelon.pivots())
    if (c < sys.edges) ++offdiag_pivots;
  out.zero_diag_dim = sys.edges - offdiag_pivots;
  for (auto& v : sys.echelon.kernel()) {
    QVector c = detail::primitive(v);
    out.basis.push_back(coords_to_matrix(g, c));
    out.coords.push_back(std::move(c));
  }
  return out;
}

ExistenceVerdict check_pseudo(const Graph& g, const RankFactor& a) {
  const SubspaceBasis k = pseudo_kernel(g, a);
  ExistenceVerdict v;
  v.kernel_dim = k.dim();
  v.zero_diag_dim = k.zero_diag_dim;
  v.method = "lp";
  if (k.dim() == 0) {
    v.exists = v.unique = true;
    v.method = "trivial-kernel";
    return v;
  }
  // Variables: c_1..c_m free, s_1..s_p >= 0 with diag(sum c_k Phi_k) = s, sum s = 1.
  const std::size_t m = k.dim();
  const std::size_t p = g.order();
  const std::size_t ne = g.size();
  QMatrix e(p + 1, m + p);
  QVector f(p + 1);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t c = 0; c < m; ++c) e(i, c) = k.coords[c][ne + i];
    e(i, m + i) = -1;
    e(p, m + i) = 1;
  }
  f[p] = 1;
  std::vector<std::size_t> nonneg;
  for (std::size_t i = 0; i < p; ++i) nonneg.push_back(m + i);
  LpResult lp = lp_feasible(e, f, nonneg);
  if (lp.feasible) {
    QVector coords(sym_dim(g));
    for (std::size_t c = 0; c < m; ++c) {
      const Rational& w = (*lp.point)[c];
      if (sgn(w) == 0) continue;
      for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += w * k.coords[c][j];
    }
    v.certificate = coords_to_matrix(g, coords);
    return v;
  }
  v.exists = true;
  v.unique = k.zero_diag_dim == 0;
  return v;
}

bool is_psd_exact(const QMatrix& m) {
  try {
    RankFactor::from_psd(m);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

bool valid_pseudo_certificate(const Graph& g, const RankFactor& a, const QMatrix& phi) {
  if (phi.rows() != g.order() || phi.cols() != g.order() || !phi.is_symmetric()) return false;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (sgn(phi(i, j)) != 0 && !g.adjacent(i, j)) return false;
  bool positive = false;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (sgn(phi(i, i)) < 0) return false;
    positive = positive || sgn(phi(i, i)) > 0;
  }
  return positive && (a.x() * phi).is_zero();
}

}  // namespace glrank
