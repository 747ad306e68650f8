#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glrank/echelon.hpp"
#include "glrank/graph.hpp"
#include "glrank/qmatrix.hpp"
#include "glrank/rank_factor.hpp"
#include "glrank/sym_matrix.hpp"

namespace glrank {

// Coordinates on S_G: edge e of g.edges() is index e, diagonal i is index |E| + i.
// Off-diagonal coordinates come first so that an echelon form separates them from the
// diagonal block.
std::size_t sym_dim(const Graph& g);
QMatrix coords_to_matrix(const Graph& g, const QVector& coords);
/// Throws std::invalid_argument when m is not symmetric or is nonzero off the pattern of g.
QVector matrix_to_coords(const Graph& g, const QMatrix& m);

/// Integer equations of X Omega = 0 over S_G coordinates: one row per (row k of X, column i).
std::vector<ZVector> pseudo_equations(const Graph& g, const RankFactor& a);

/// Basis of K_A ∩ S_G.
struct SubspaceBasis {
  std::size_t p = 0;
  std::vector<QVector> coords;  // S_G coordinates
  std::vector<QMatrix> basis;   // the same elements as symmetric p x p matrices
  std::size_t zero_diag_dim = 0;  // dim(K_A ∩ S_G with zero diagonal)

  std::size_t dim() const noexcept { return basis.size(); }
};

SubspaceBasis pseudo_kernel(const Graph& g, const RankFactor& a);

struct ExistenceVerdict {
  bool exists = false;
  bool unique = false;
  /// Gaussian only: the numeric search could not decide. exists/unique are false then.
  bool inconclusive = false;
  std::size_t kernel_dim = 0;
  std::size_t zero_diag_dim = 0;
  /// Exact witness of nonexistence: in K_A ∩ S_G with diag >= 0, diag != 0 (pseudo)
  /// or PSD and nonzero (Gaussian).
  std::optional<QMatrix> certificate;
  /// Gaussian only: floating-point PSD witness from the numeric search, trace 1.
  std::optional<SymMatrix> psd_witness;
  /// Which decision procedure settled the verdict.
  std::string method;
};

/// Pseudo existence decided by exact LP over the kernel coordinates.
ExistenceVerdict check_pseudo(const Graph& g, const RankFactor& a);

/// Same decision by recursion over the faces of the nonnegative orthant. Throws
/// BudgetExceeded when more than max_faces faces are explored (0 means 2^p).
ExistenceVerdict check_pseudo_recursive(const Graph& g, const RankFactor& a, std::size_t max_faces = 0);

struct GaussianOptions {
  double tol = 1e-9;
  std::size_t max_iter = 10000;
  /// Iterations between attempts at a dual (existence) certificate.
  std::size_t certificate_every = 10;
};

/// Decides whether K_A ∩ S_G contains a nonzero PSD matrix (then no Gaussian MLE).
/// dim 0: exists. dim 1: exact PSD test of the generator. Larger: alternating projections
/// between the kernel subspace and {M PSD, tr M = 1}, with an exact PSD test on the support
/// of stalled iterates; existence needs a positive definite matrix orthogonal to the kernel.
ExistenceVerdict check_gaussian(const Graph& g, const RankFactor& a, const GaussianOptions& opts = {});

/// Exact PSD test for a rational symmetric matrix.
bool is_psd_exact(const QMatrix& m);

/// Exact check of a pseudo nonexistence certificate against (g, a).
bool valid_pseudo_certificate(const Graph& g, const RankFactor& a, const QMatrix& phi);

/// Algorithm-1 generic completion rank; consensus (minimum) of per-trial first hits.
std::size_t generic_completion_rank(const Graph& g, std::size_t trials, std::uint64_t seed);
/// First hit for one random coefficient matrix; p when no r < p reaches full rank.
std::size_t generic_completion_rank_trial(const Graph& g, std::uint64_t seed);

struct RankBounds {
  std::size_t kappa_star_plus1 = 0;
  std::size_t weak_rank_estimate = 0;      // rho-hat
  std::size_t gaussian_rank_estimate = 0;  // gamma-hat
  std::size_t gcr = 0;                     // ell
  std::size_t degeneracy_plus1 = 0;
  std::size_t rbar = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Gaussian verdicts that came back inconclusive during the gamma-hat search.
  std::size_t gaussian_inconclusive = 0;

  /// Named failures of kappa*+1 <= gamma <= rho <= ell <= delta+1 and rbar <= ell.
  std::vector<std::string> violations() const;
};

struct WeakRankOptions {
  GaussianOptions gaussian;
  bool compute_rbar = true;
  bool compute_gcr = true;
};

/// Randomized estimates of the weak ranks. Disconnected graphs are handled per component
/// and the maximum is reported.
RankBounds estimate_weak_ranks(const Graph& g, std::size_t trials, std::uint64_t seed,
                               const WeakRankOptions& opts = {});

}  // namespace glrank
