#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "glrank/graph.hpp"
#include "glrank/sym_matrix.hpp"

namespace glrank {

enum class ObjectiveKind { concord, conspace, gaussian, space_uniform };

std::string to_string(ObjectiveKind kind);
/// Accepts "concord", "conspace", "gaussian", "space_uniform"; throws std::invalid_argument.
ObjectiveKind parse_objective_kind(const std::string& name);

/// An objective evaluated at a fixed PSD input A (usually the sample covariance).
///   concord:  -2 sum log w_ii + tr(W A W)
///   conspace: -2 sum log w_ii + sum_i (W A W)_ii / w_ii
///   gaussian: -log det W + tr(A W)
///   space_uniform: -1/2 sum log w_ii + sum_i v_i^T A v_i / w_ii^2,
///                  v_i = w_ii e_i - sum_{j != i} w_ij e_j
/// The sample-size factor n is dropped throughout.
struct Objective {
  /// Throws DomainError unless s is PSD to within 1e-10 (relative to its largest eigenvalue).
  Objective(ObjectiveKind kind, SymMatrix s);

  ObjectiveKind kind;
  SymMatrix s;
};

/// Throws DomainError outside the domain (non-positive diagonal; not PD for gaussian).
double evaluate(const Objective& obj, const SymMatrix& omega);

/// Gradient over the S_G coordinates (edges of g in order, then the diagonal).
Eigen::VectorXd gradient(const Objective& obj, const Graph& g, const SymMatrix& omega);

enum class FitStatus { converged, diverged, maxiter };
std::string to_string(FitStatus status);

struct FitOptions {
  double tol = 1e-8;
  std::size_t max_iter = 10000;
  double divergence_threshold = 1e6;
  /// Pseudo objectives: follow each coordinate sweep with a damped Newton step. Pure
  /// coordinate descent creeps towards infinity too slowly to cross the threshold.
  bool newton = true;
};

struct FitResult {
  SymMatrix omega;
  double objective_value = 0.0;
  std::size_t iterations = 0;
  FitStatus status = FitStatus::maxiter;
};

/// Minimises obj over the matrices with the sparsity of g. Coordinate descent with exact
/// one-dimensional updates (plus Newton steps) for the pseudo objectives, damped Newton
/// for gaussian. Throws std::invalid_argument for space_uniform, which has no minimiser.
FitResult fit(const Objective& obj, const Graph& g, const FitOptions& opts = {});

/// One cyclic sweep of exact coordinate minimisation over the diagonal and the edges of g.
/// Returns the largest absolute update, or +inf when a coordinate is unbounded below.
double coordinate_sweep(const Objective& obj, const Graph& g, SymMatrix& omega);

/// Starting point used by fit().
SymMatrix initial_point(const Objective& obj, double eps = 1e-6);

/// Uniform-weight SPACE objective at Omega = t I for each t, with the n factor kept:
/// -(n/2) p log t + sum_i ||x_i||^2.
std::vector<double> demonstrate_space_unbounded(const Graph& g, const Eigen::MatrixXd& x,
                                                const std::vector<double>& t_values);

/// max over the diagonal and edges of g of |S_ij - (Omega^{-1})_ij|. Throws DomainError
/// when omega is singular.
double gaussian_stationarity_residual(const Graph& g, const SymMatrix& s, const SymMatrix& omega);

}  // namespace glrank
