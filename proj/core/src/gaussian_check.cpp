#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>

#include "glrank/certify.hpp"
#include "glrank/echelon.hpp"
#include "glrank/errors.hpp"

namespace glrank {

namespace {

// Divides by the largest entry exactly before rounding. Kernel elements of rationalised data
// can have entries far beyond the double range; only their direction matters here.
Eigen::MatrixXd to_double_scaled(const QMatrix& m) {
  Rational top = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) top = std::max<Rational>(top, abs(m(i, j)));
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  if (sgn(top) == 0) return d;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational q = m(i, j) / top;
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = q.get_d();
    }
  return d;
}

// Orthonormal basis (Frobenius inner product) of a subspace of symmetric matrices.
class Subspace {
 public:
  Subspace(const std::vector<QMatrix>& basis, std::size_t p) : p_(static_cast<Eigen::Index>(p)) {
    Eigen::MatrixXd cols(p_ * p_, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Eigen::MatrixXd b = to_double_scaled(basis[k]);
      b /= b.norm();
      cols.col(static_cast<Eigen::Index>(k)) = Eigen::Map<Eigen::VectorXd>(b.data(), b.size());
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(cols);
    q_ = qr.householderQ() * Eigen::MatrixXd::Identity(cols.rows(), cols.cols());
  }

  Eigen::MatrixXd project(const Eigen::MatrixXd& y) const {
    Eigen::Map<const Eigen::VectorXd> v(y.data(), y.size());
    Eigen::VectorXd pv = q_ * (q_.transpose() * v);
    Eigen::MatrixXd out = Eigen::Map<Eigen::MatrixXd>(pv.data(), p_, p_);
    return 0.5 * (out + out.transpose());
  }

 private:
  Eigen::Index p_;
  Eigen::MatrixXd q_;
};

// Euclidean projection onto {M PSD, tr M = 1}: project the spectrum onto the simplex.
Eigen::MatrixXd project_spectraplex(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& lam = es.eigenvalues();
  std::vector<double> u(lam.data(), lam.data() + lam.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0) theta = t;
  }
  Eigen::VectorXd mu = (lam.array() - theta).max(0.0);
  return es.eigenvectors() * mu.asDiagonal() * es.eigenvectors().transpose();
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

enum class Outcome { exists, nonexistent, undecided };

struct Decision {
  Outcome outcome = Outcome::undecided;
  std::optional<QMatrix> certificate;
  std::optional<SymMatrix> witness;
  std::string method;
};

Decision exact_line(const QMatrix& phi) {
  Decision d;
  d.method = "exact-psd";
  if (is_psd_exact(phi)) {
    d.outcome = Outcome::nonexistent;
    d.certificate = phi;
  } else {
    QMatrix neg = phi;
    for (std::size_t i = 0; i < neg.rows(); ++i)
      for (std::size_t j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
    if (is_psd_exact(neg)) {
      d.outcome = Outcome::nonexistent;
      d.certificate = std::move(neg);
    } else {
      d.outcome = Outcome::exists;
    }
  }
  return d;
}

// Elements of span(basis) vanishing on every entry with a row or column outside `keep`.
std::vector<QMatrix> restrict_support(const std::vector<QMatrix>& basis, const std::vector<char>& keep) {
  const std::size_t p = basis.front().rows();
  const std::size_t m = basis.size();
  std::vector<QVector> eqs;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) {
      if (keep[i] && keep[j]) continue;
      QVector row(m);
      bool any = false;
      for (std::size_t k = 0; k < m; ++k) {
        row[k] = basis[k](i, j);
        any = any || sgn(row[k]) != 0;
      }
      if (any) eqs.push_back(std::move(row));
    }
  std::vector<QMatrix> out;
  for (const auto& c : kernel_basis(QMatrix::from_rows(eqs, m))) {
    QMatrix phi(p, p);
    for (std::size_t k = 0; k < m; ++k) {
      if (sgn(c[k]) == 0) continue;
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) phi(i, j) += c[k] * basis[k](i, j);
    }
    out.push_back(std::move(phi));
  }
  return out;
}

Decision decide(const std::vector<QMatrix>& basis, std::size_t p, const GaussianOptions& opts, int depth);

Rational frobenius_dot(const QMatrix& a, const QMatrix& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * b(i, j);
  return acc;
}

// Rounds z to rationals, removes its component along span(basis) exactly and tests the
// remainder for positive definiteness exactly. Success proves that no nonzero PSD matrix
// lies in the span.
bool exact_dual_certificate(const std::vector<QMatrix>& basis, const Eigen::MatrixXd& z) {
  const std::size_t p = basis.front().rows();
  const std::size_t m = basis.size();
  QMatrix q(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = 0.5 * (z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +
                              z(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)));
      if (!std::isfinite(v)) return false;
      q(i, j) = q(j, i) = from_double(v);
    }
  // Normal equations G c = r, solved by exact elimination (G is positive definite).
  std::vector<QVector> aug(m, QVector(m + 1));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k; l < m; ++l) aug[k][l] = aug[l][k] = frobenius_dot(basis[k], basis[l]);
    aug[k][m] = frobenius_dot(basis[k], q);
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && sgn(aug[piv][c]) == 0) ++piv;
    if (piv == m) return false;
    std::swap(aug[c], aug[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || sgn(aug[r][c]) == 0) continue;
      const Rational f = aug[r][c] / aug[c][c];
      for (std::size_t k = c; k <= m; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    const Rational coef = aug[k][m] / aug[k][k];
    if (sgn(coef) == 0) continue;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) q(i, j) -= coef * basis[k](i, j);
  }
  try {
    return RankFactor::from_psd(q).rows() == p;
  } catch (const DomainError&) {
    return false;
  }
}

// Near a tangential intersection the iterate's diagonal decays towards the witness support
// far too slowly for a fixed threshold. Try every leading set of the diagonal ordering and
// settle exactly whenever the kernel restricted to it is a single line.
class LeadingSupports {
 public:
  // Restrictions up to this dimension are decided on the spot, by recursion when above 1.
  static constexpr std::size_t kMaxRestrictedDim = 3;

  LeadingSupports(const std::vector<QMatrix>& basis, const GaussianOptions& opts)
      : basis_(basis), p_(basis.front().rows()), inner_(opts) {
    inner_.max_iter = std::min<std::size_t>(opts.max_iter, 2000);
    // Upper-triangle entries of each element, scaled to primitive integers; scaling an
    // element does not change the span, so these give the restriction equations mod a prime.
    for (const auto& b : basis) {
      QVector flat;
      for (std::size_t i = 0; i < p_; ++i)
        for (std::size_t j = i; j < p_; ++j) flat.push_back(b(i, j));
      scaled_.push_back(primitive_integer_row(flat));
    }
  }

  std::optional<Decision> search(const Eigen::MatrixXd& y) {
    std::vector<std::size_t> order(p_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return y(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) >
             y(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b));
    });
    std::vector<char> keep(p_, 0);
    for (std::size_t k = 0; k + 1 < p_; ++k) {
      keep[order[k]] = 1;
      if (!tried_.insert(keep).second) continue;
      // The modular rank can only undercount, so this dimension is an upper bound.
      const std::size_t dim = basis_.size() - modular_rank(equations(keep), basis_.size());
      if (dim == 0 || dim > kMaxRestrictedDim || dim == basis_.size()) continue;
      const auto sub = restrict_support(basis_, keep);
      if (sub.empty()) continue;
      Decision d = decide(sub, p_, inner_, 1);
      if (d.outcome == Outcome::nonexistent) {
        d.method = "support-restricted " + d.method;
        return d;
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<ZVector> equations(const std::vector<char>& keep) const {
    std::vector<ZVector> rows;
    std::size_t t = 0;
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = i; j < p_; ++j, ++t) {
        if (keep[i] && keep[j]) continue;
        ZVector row(basis_.size());
        bool any = false;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
          row[k] = scaled_[k][t];
          any = any || sgn(row[k]) != 0;
        }
        if (any) rows.push_back(std::move(row));
      }
    return rows;
  }

  const std::vector<QMatrix>& basis_;
  std::size_t p_;
  std::vector<ZVector> scaled_;
  GaussianOptions inner_;
  std::set<std::vector<char>> tried_;
};

// Alternating projections between L and the spectraplex, with periodic attempts at a dual
// certificate and, when progress stalls, an exact look at the support of the iterate.
Decision alternating_projections(const std::vector<QMatrix>& basis, std::size_t p, const GaussianOptions& opts,
                                 int depth) {
  const Subspace l(basis, p);
  LeadingSupports leading(basis, opts);
  const auto n = static_cast<Eigen::Index>(p);
  Decision d;
  Eigen::MatrixXd m = l.project(Eigen::MatrixXd::Identity(n, n) / static_cast<double>(p));
  if (m.norm() < 1e-14 && exact_dual_certificate(basis, Eigen::MatrixXd::Identity(n, n))) {
    // Every element of L is traceless, so the identity separates L from the cone.
    d.outcome = Outcome::exists;
    d.method = "dual-certificate";
    return d;
  }
  const std::size_t every = std::max<std::size_t>(1, opts.certificate_every);
  std::vector<std::size_t> checkpoints{100, 200, 500, 1000, 2000, 3000, 5000, opts.max_iter};
  Eigen::MatrixXd y;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    y = project_spectraplex(m);
    Eigen::MatrixXd next = l.project(y);
    const double residual = (y - next).norm();
    if (residual < opts.tol) {
      if (depth == 0) {
        if (auto r = leading.search(next)) return *r;
      }
      const double tr = next.trace();
      d.outcome = Outcome::nonexistent;
      d.method = "alternating-projections";
      d.witness = SymMatrix::symmetrized(next / (std::abs(tr) > 0 ? tr : 1.0));
      return d;
    }
    if (it % every == 0) {
      Eigen::MatrixXd sep = y - next;
      const Eigen::MatrixXd leak = l.project(sep);
      sep -= leak;
      const double lmin = min_eigenvalue(sep);
      if (lmin > 1e-9 * sep.norm() + 1e-14 + leak.norm() && exact_dual_certificate(basis, sep / sep.norm())) {
        d.outcome = Outcome::exists;
        d.method = "dual-certificate";
        return d;
      }
    }
    m = std::move(next);
    if (depth == 0 && std::find(checkpoints.begin(), checkpoints.end(), it) != checkpoints.end()) {
      if (auto r = leading.search(y)) return *r;
      const double top = y.diagonal().maxCoeff();
      std::vector<char> keep(p, 0);
      std::size_t kept = 0;
      for (std::size_t i = 0; i < p; ++i) {
        keep[i] = y(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) > 1e-6 * top;
        kept += keep[i] ? 1 : 0;
      }
      if (kept == 0 || kept == p) continue;
      auto sub = restrict_support(basis, keep);
      if (sub.empty()) continue;
      GaussianOptions inner = opts;
      inner.max_iter = std::max<std::size_t>(1000, opts.max_iter / 4);
      Decision r = decide(sub, p, inner, depth + 1);
      // Existence on a sub-support says nothing about L; only a witness transfers.
      if (r.outcome == Outcome::nonexistent) {
        r.method = "support-restricted " + r.method;
        return r;
      }
    }
  }
  d.outcome = Outcome::undecided;
  d.method = "alternating-projections";
  return d;
}

Decision decide(const std::vector<QMatrix>& basis, std::size_t p, const GaussianOptions& opts, int depth) {
  if (basis.empty()) {
    Decision d;
    d.outcome = Outcome::exists;
    d.method = "trivial-kernel";
    return d;
  }
  if (basis.size() == 1) return exact_line(basis.front());
  return alternating_projections(basis, p, opts, depth);
}

// Bron-Kerbosch with pivoting; stops after `cap` maximal cliques.
void maximal_cliques(const Graph& g, std::vector<std::size_t>& r, std::vector<std::size_t> cand,
                     std::vector<std::size_t> excl, std::vector<std::vector<std::size_t>>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (cand.empty() && excl.empty()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = cand.empty() ? excl.front() : cand.front();
  std::size_t best = 0;
  for (const auto* set : {&cand, &excl})
    for (std::size_t u : *set) {
      std::size_t c = 0;
      for (std::size_t w : cand) c += g.adjacent(u, w) ? 1 : 0;
      if (c >= best) best = c, pivot = u;
    }
  const std::vector<std::size_t> todo = [&] {
    std::vector<std::size_t> t;
    for (std::size_t w : cand)
      if (!g.adjacent(pivot, w)) t.push_back(w);
    return t;
  }();
  for (std::size_t v : todo) {
    std::vector<std::size_t> c2, x2;
    for (std::size_t w : cand)
      if (g.adjacent(v, w)) c2.push_back(w);
    for (std::size_t w : excl)
      if (g.adjacent(v, w)) x2.push_back(w);
    r.push_back(v);
    maximal_cliques(g, r, std::move(c2), std::move(x2), out, cap);
    r.pop_back();
    cand.erase(std::find(cand.begin(), cand.end(), v));
    excl.push_back(v);
  }
}

inline constexpr std::size_t kCliqueCap = 10000;

// v v^T with X v = 0 and v supported on a clique lies in K_A ∩ S_G and is PSD. A clique
// whose columns of X are dependent is the classical obstruction to the Gaussian MLE.
std::optional<QMatrix> clique_witness(const Graph& g, const RankFactor& a) {
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> r;
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  maximal_cliques(g, r, all, {}, cliques, kCliqueCap);
  for (const auto& c : cliques) {
    QMatrix xc(a.rows(), c.size());
    for (std::size_t k = 0; k < a.rows(); ++k)
      for (std::size_t j = 0; j < c.size(); ++j) xc(k, j) = a.x()(k, c[j]);
    std::vector<ZVector> rows;
    for (std::size_t k = 0; k < a.rows(); ++k) rows.push_back(primitive_integer_row(xc.row(k)));
    if (!rows.empty() && modular_rank(rows, c.size()) == c.size()) continue;
    const auto ker = kernel_basis(xc);
    if (ker.empty()) continue;
    const ZVector v = primitive_integer_row(ker.front());
    QMatrix psi(g.order(), g.order());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) psi(c[i], c[j]) = Rational(v[i] * v[j]);
    return psi;
  }
  return std::nullopt;
}

}  // namespace

ExistenceVerdict check_gaussian(const Graph& g, const RankFactor& a, const GaussianOptions& opts) {
  ExistenceVerdict v;
  std::vector<ZVector> rows;
  for (std::size_t k = 0; k < a.rows(); ++k) rows.push_back(primitive_integer_row(a.x().row(k)));
  if (a.rows() >= g.order() && modular_rank(rows, g.order()) == g.order()) {
    v.exists = v.unique = true;
    v.method = "full-rank";
    return v;
  }
  const SubspaceBasis k = pseudo_kernel(g, a);
  v.kernel_dim = k.dim();
  v.zero_diag_dim = k.zero_diag_dim;
  Decision d;
  if (k.dim() >= 2) {
    if (auto psi = clique_witness(g, a)) {
      d.outcome = Outcome::nonexistent;
      d.certificate = std::move(psi);
      d.method = "clique-kernel";
    }
  }
  if (d.outcome == Outcome::undecided) d = decide(k.basis, g.order(), opts, 0);
  v.method = d.method;
  switch (d.outcome) {
    case Outcome::exists:
      v.exists = v.unique = true;
      break;
    case Outcome::nonexistent:
      v.certificate = std::move(d.certificate);
      v.psd_witness = std::move(d.witness);
      if (v.certificate && !v.psd_witness) {
        Eigen::MatrixXd c = to_double_scaled(*v.certificate);
        v.psd_witness = SymMatrix::symmetrized(c / c.trace());
      }
      break;
    case Outcome::undecided:
      v.inconclusive = true;
      break;
  }
  return v;
}

}  // namespace glrank
