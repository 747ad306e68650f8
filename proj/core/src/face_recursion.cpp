#include <cstdint>
#include <optional>
#include <unordered_set>

#include "glrank/certify.hpp"
#include "glrank/errors.hpp"
#include "pseudo_system.hpp"

namespace glrank {

namespace {

using Mask = std::uint32_t;

// Searches ker(D') ∩ [0,inf)^p \ {0}, where D' is the diagonal block of the echelon form.
// Coordinates outside the current face are pinned to zero.
class FaceSearch {
 public:
  FaceSearch(std::vector<ZVector> rows, std::size_t p, std::size_t max_faces)
      : rows_(std::move(rows)), p_(p), max_faces_(max_faces) {}

  std::optional<QVector> solve(Mask face) {
    if (!visited_.insert(face).second) return std::nullopt;
    if (visited_.size() > max_faces_) {
      throw BudgetExceeded("check_pseudo_recursive: explored more than " + std::to_string(max_faces_) + " faces");
    }
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < p_; ++i)
      if (face >> i & 1U) cols.push_back(i);

    IntegerEchelon ech(cols.size());
    for (const auto& row : rows_) {
      ZVector r(cols.size());
      bool any = false;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        r[c] = row[cols[c]];
        any = any || sgn(r[c]) != 0;
      }
      if (any) ech.insert(std::move(r));
    }
    const auto kernel = ech.kernel();
    if (kernel.empty()) return std::nullopt;

    // The kernel may live inside a boundary face already; then the problem reduces.
    Mask support = 0;
    for (const auto& v : kernel)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (sgn(v[c]) != 0) support |= Mask{1} << cols[c];
    if (support != face) return solve(support);

    if (ech.rank() == 0) return unit(cols.front());
    if (ech.rank() == 1) {
      // ker = w^perp. A nonnegative nonzero point exists unless w is strictly one-signed.
      const ZVector& w = ech.rows().front();
      std::optional<std::size_t> pos, neg;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (sgn(w[c]) == 0) return unit(cols[c]);
        if (sgn(w[c]) > 0 && !pos) pos = c;
        if (sgn(w[c]) < 0 && !neg) neg = c;
      }
      if (!pos || !neg) return std::nullopt;
      QVector y(p_);
      y[cols[*pos]] = Rational(-w[*neg]);
      y[cols[*neg]] = Rational(w[*pos]);
      return y;
    }
    if (kernel.size() == 1) {
      // One-dimensional: a ray, nonnegative iff one-signed (all entries nonzero here).
      const QVector& v = kernel.front();
      const int s = sgn(v.front());
      for (const auto& x : v)
        if (sgn(x) != s) return std::nullopt;
      QVector y(p_);
      for (std::size_t c = 0; c < cols.size(); ++c) y[cols[c]] = s > 0 ? v[c] : Rational(-v[c]);
      return y;
    }
    // dim >= 2: any nonnegative kernel point can be slid along a second kernel direction
    // until it hits a boundary face without reaching zero, so the faces suffice.
    for (std::size_t i : cols) {
      if (auto y = solve(face & ~(Mask{1} << i))) return y;
    }
    return std::nullopt;
  }

 private:
  QVector unit(std::size_t i) const {
    QVector y(p_);
    y[i] = 1;
    return y;
  }

  std::vector<ZVector> rows_;
  std::size_t p_;
  std::size_t max_faces_;
  std::unordered_set<Mask> visited_;
};

}  // namespace

ExistenceVerdict check_pseudo_recursive(const Graph& g, const RankFactor& a, std::size_t max_faces) {
  const std::size_t p = g.order();
  if (p > 31) throw BudgetExceeded("check_pseudo_recursive: p=" + std::to_string(p) + " exceeds 31");
  if (max_faces == 0) max_faces = std::size_t{1} << p;
  auto sys = detail::reduce_pseudo_system(g, a);
  ExistenceVerdict v;
  v.method = "face-recursion";
  if (sys.trivial) {
    v.exists = v.unique = true;
    return v;
  }
  const std::size_t ne = sys.edges;
  const auto& ech = sys.echelon;
  v.kernel_dim = ech.nullity();
  std::size_t offdiag_pivots = 0;
  std::vector<ZVector> dprime;
  for (std::size_t k = 0; k < ech.rank(); ++k) {
    if (ech.pivots()[k] < ne) {
      ++offdiag_pivots;
      continue;
    }
    dprime.emplace_back(ech.rows()[k].begin() + static_cast<std::ptrdiff_t>(ne), ech.rows()[k].end());
  }
  v.zero_diag_dim = ne - offdiag_pivots;

  FaceSearch search(std::move(dprime), p, max_faces);
  const Mask all = p == 32 ? ~Mask{0} : (Mask{1} << p) - 1;
  auto y = search.solve(all);
  if (!y) {
    v.exists = true;
    v.unique = v.zero_diag_dim == 0;
    return v;
  }
  // Lift the diagonal to a kernel element: free off-diagonal coordinates set to zero.
  Rational total = 0;
  for (const auto& q : *y) total += q;
  QVector x(sym_dim(g));
  for (std::size_t i = 0; i < p; ++i)
    if (!ech.is_pivot(ne + i)) x[ne + i] = (*y)[i] / total;
  ech.back_substitute(x);
  for (std::size_t i = 0; i < p; ++i)
    if (x[ne + i] != (*y)[i] / total) throw std::logic_error("check_pseudo_recursive: lift mismatch");
  v.certificate = coords_to_matrix(g, x);
  return v;
}

}  // namespace glrank
