#include "glrank/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glrank/errors.hpp"

namespace glrank {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

Index ix(std::size_t i) { return static_cast<Index>(i); }

bool is_pseudo(ObjectiveKind k) { return k == ObjectiveKind::concord || k == ObjectiveKind::conspace; }

// Objective on a dense symmetric matrix; +inf outside the domain.
double value(ObjectiveKind kind, const MatrixXd& a, const MatrixXd& w) {
  const Index p = w.rows();
  if (kind == ObjectiveKind::gaussian) {
    Eigen::LLT<MatrixXd> llt(w);
    if (llt.info() != Eigen::Success) return kInf;
    const MatrixXd& l = llt.matrixLLT();
    double logdet = 0.0;
    for (Index i = 0; i < p; ++i) {
      if (!(l(i, i) > 0)) return kInf;
      logdet += 2.0 * std::log(l(i, i));
    }
    return -logdet + (a.cwiseProduct(w)).sum();
  }
  for (Index i = 0; i < p; ++i)
    if (!(w(i, i) > 0)) return kInf;
  const MatrixXd aw = a * w;
  double f = 0.0;
  for (Index i = 0; i < p; ++i) {
    const double wii = w(i, i);
    if (kind == ObjectiveKind::space_uniform) {
      VectorXd v = -w.col(i);
      v(i) = wii;
      f += -0.5 * std::log(wii) + v.dot(a * v) / (wii * wii);
      continue;
    }
    const double q = w.col(i).dot(aw.col(i));
    f += -2.0 * std::log(wii) + (kind == ObjectiveKind::concord ? q : q / wii);
  }
  return f;
}

// Matrix gradient G with directional derivative <G, E> for symmetric E.
MatrixXd gradient_matrix(ObjectiveKind kind, const MatrixXd& a, const MatrixXd& w, const MatrixXd* winv) {
  const Index p = w.rows();
  switch (kind) {
    case ObjectiveKind::concord: {
      MatrixXd aw = a * w;
      MatrixXd g = aw + aw.transpose();
      for (Index i = 0; i < p; ++i) g(i, i) -= 2.0 / w(i, i);
      return g;
    }
    case ObjectiveKind::conspace: {
      const MatrixXd aw = a * w;
      VectorXd dinv(p);
      for (Index i = 0; i < p; ++i) dinv(i) = 1.0 / w(i, i);
      MatrixXd awd = aw * dinv.asDiagonal();
      MatrixXd g = awd + awd.transpose();
      for (Index i = 0; i < p; ++i) {
        const double q = w.col(i).dot(aw.col(i));
        g(i, i) += -2.0 * dinv(i) - q * dinv(i) * dinv(i);
      }
      return g;
    }
    case ObjectiveKind::gaussian:
      return a - *winv;
    case ObjectiveKind::space_uniform:
      break;
  }
  throw std::invalid_argument("gradient: not available for space_uniform");
}

// Directional derivative of gradient_matrix in direction e.
MatrixXd hessian_action(ObjectiveKind kind, const MatrixXd& a, const MatrixXd& w, const MatrixXd* winv,
                        const MatrixXd& e) {
  const Index p = w.rows();
  switch (kind) {
    case ObjectiveKind::concord: {
      MatrixXd ae = a * e;
      MatrixXd h = ae + ae.transpose();
      for (Index i = 0; i < p; ++i) h(i, i) += 2.0 * e(i, i) / (w(i, i) * w(i, i));
      return h;
    }
    case ObjectiveKind::conspace: {
      const MatrixXd aw = a * w;
      const MatrixXd ae = a * e;
      VectorXd dinv(p), ddot(p);
      for (Index i = 0; i < p; ++i) {
        dinv(i) = 1.0 / w(i, i);
        ddot(i) = -e(i, i) * dinv(i) * dinv(i);
      }
      MatrixXd t = ae * dinv.asDiagonal() + aw * ddot.asDiagonal();
      MatrixXd h = t + t.transpose();
      for (Index i = 0; i < p; ++i) {
        const double q = w.col(i).dot(aw.col(i));
        const double dq = 2.0 * w.col(i).dot(ae.col(i));
        const double d2 = dinv(i) * dinv(i);
        h(i, i) += 2.0 * e(i, i) * d2 - dq * d2 + 2.0 * q * e(i, i) * d2 * dinv(i);
      }
      return h;
    }
    case ObjectiveKind::gaussian:
      return (*winv) * e * (*winv);
    case ObjectiveKind::space_uniform:
      break;
  }
  throw std::invalid_argument("hessian: not available for space_uniform");
}

struct Coordinates {
  std::vector<std::pair<Index, Index>> entries;  // (u, v); u == v for diagonal coordinates

  explicit Coordinates(const Graph& g) {
    for (const Edge& e : g.edges()) entries.emplace_back(ix(e.u), ix(e.v));
    for (std::size_t i = 0; i < g.order(); ++i) entries.emplace_back(ix(i), ix(i));
  }
  std::size_t size() const { return entries.size(); }

  VectorXd project(const MatrixXd& m) const {
    VectorXd c(ix(size()));
    for (std::size_t k = 0; k < size(); ++k) {
      auto [u, v] = entries[k];
      c(ix(k)) = u == v ? m(u, u) : m(u, v) + m(v, u);
    }
    return c;
  }
  MatrixXd basis(std::size_t k, Index p) const {
    MatrixXd e = MatrixXd::Zero(p, p);
    auto [u, v] = entries[k];
    e(u, v) = 1.0;
    e(v, u) = 1.0;
    return e;
  }
  MatrixXd embed(const VectorXd& c, Index p) const {
    MatrixXd m = MatrixXd::Zero(p, p);
    for (std::size_t k = 0; k < size(); ++k) {
      auto [u, v] = entries[k];
      m(u, v) = c(ix(k));
      m(v, u) = c(ix(k));
    }
    return m;
  }
};

MatrixXd inverse_or_throw(const MatrixXd& w) {
  Eigen::FullPivLU<MatrixXd> lu(w);
  if (!lu.isInvertible()) throw DomainError("matrix is singular");
  return lu.inverse();
}

// Damped Newton step over the S_G coordinates; returns the largest coordinate change.
double newton_step(ObjectiveKind kind, const MatrixXd& a, const Coordinates& coords, MatrixXd& w, double& f) {
  const Index p = w.rows();
  MatrixXd winv;
  if (kind == ObjectiveKind::gaussian) winv = inverse_or_throw(w);
  const MatrixXd* wi = kind == ObjectiveKind::gaussian ? &winv : nullptr;
  const VectorXd g = coords.project(gradient_matrix(kind, a, w, wi));
  const auto n = ix(coords.size());
  MatrixXd h(n, n);
  for (Index d = 0; d < n; ++d) h.col(d) = coords.project(hessian_action(kind, a, w, wi, coords.basis(std::size_t(d), p)));
  h = 0.5 * (h + h.transpose());
  double mu = 1e-12 * std::max(1.0, h.diagonal().cwiseAbs().maxCoeff());
  VectorXd step;
  for (int attempt = 0; attempt < 40; ++attempt) {
    Eigen::LLT<MatrixXd> llt(h + mu * MatrixXd::Identity(n, n));
    if (llt.info() == Eigen::Success) {
      step = -llt.solve(g);
      if (step.allFinite() && g.dot(step) < 0) break;
    }
    step.resize(0);
    mu *= 10.0;
  }
  if (step.size() == 0) return 0.0;
  const MatrixXd dir = coords.embed(step, p);
  const double slope = g.dot(step);
  double alpha = 1.0;
  for (int k = 0; k < 60; ++k, alpha *= 0.5) {
    MatrixXd trial = w + alpha * dir;
    const double ft = value(kind, a, trial);
    if (std::isfinite(ft) && ft <= f + 1e-4 * alpha * slope) {
      w = std::move(trial);
      f = ft;
      return alpha * step.cwiseAbs().maxCoeff();
    }
  }
  return 0.0;
}

// Exact coordinate minimisation; w_aw caches A * w.
double sweep(ObjectiveKind kind, const MatrixXd& a, const Graph& g, MatrixXd& w, MatrixXd& aw) {
  const Index p = w.rows();
  double biggest = 0.0;
  for (Index i = 0; i < p; ++i) {
    const double aii = a(i, i);
    const double t = w(i, i);
    if (!(aii > 0)) return kInf;  // a zero row of A leaves -2 log t unbounded below
    const double b = aw(i, i) - aii * t;
    double next;
    if (kind == ObjectiveKind::concord) {
      next = (-b + std::sqrt(b * b + 4.0 * aii)) / (2.0 * aii);
    } else {
      const double q = w.col(i).dot(aw.col(i));
      const double c = std::max(0.0, q - aii * t * t - 2.0 * t * b);
      next = (1.0 + std::sqrt(1.0 + aii * c)) / aii;
    }
    const double delta = next - t;
    if (delta != 0.0) {
      w(i, i) = next;
      aw.col(i) += a.col(i) * delta;
    }
    biggest = std::max(biggest, std::abs(delta));
  }
  for (const Edge& e : g.edges()) {
    const Index i = ix(e.u), j = ix(e.v);
    const double x = w(i, j);
    const double si = aw(j, i) - a(j, j) * x;
    const double sj = aw(i, j) - a(i, i) * x;
    double next;
    if (kind == ObjectiveKind::concord) {
      const double denom = a(i, i) + a(j, j);
      if (!(denom > 0)) continue;
      next = -(si + sj) / denom;
    } else {
      const double denom = a(j, j) / w(i, i) + a(i, i) / w(j, j);
      if (!(denom > 0)) continue;
      next = -(si / w(i, i) + sj / w(j, j)) / denom;
    }
    const double delta = next - x;
    if (delta != 0.0) {
      w(i, j) = next;
      w(j, i) = next;
      aw.col(j) += a.col(i) * delta;
      aw.col(i) += a.col(j) * delta;
    }
    biggest = std::max(biggest, std::abs(delta));
  }
  return biggest;
}

void check_sizes(const Objective& obj, const Graph& g) {
  if (obj.s.order() != g.order()) throw std::invalid_argument("objective and graph differ in p");
}

}  // namespace

std::string to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::concord: return "concord";
    case ObjectiveKind::conspace: return "conspace";
    case ObjectiveKind::gaussian: return "gaussian";
    case ObjectiveKind::space_uniform: return "space_uniform";
  }
  return "?";
}

ObjectiveKind parse_objective_kind(const std::string& name) {
  if (name == "concord") return ObjectiveKind::concord;
  if (name == "conspace") return ObjectiveKind::conspace;
  if (name == "gaussian") return ObjectiveKind::gaussian;
  if (name == "space_uniform") return ObjectiveKind::space_uniform;
  throw std::invalid_argument("unknown objective '" + name + "'");
}

std::string to_string(FitStatus status) {
  switch (status) {
    case FitStatus::converged: return "converged";
    case FitStatus::diverged: return "diverged";
    case FitStatus::maxiter: return "maxiter";
  }
  return "?";
}

Objective::Objective(ObjectiveKind k, SymMatrix a) : kind(k), s(std::move(a)) {
  if (!s.all_finite()) throw DomainError("objective input has non-finite entries");
  if (!is_psd(s, 1e-10)) throw DomainError("objective input is not positive semidefinite");
}

double evaluate(const Objective& obj, const SymMatrix& omega) {
  if (omega.order() != obj.s.order()) throw std::invalid_argument("evaluate: size mismatch");
  const double f = value(obj.kind, obj.s.to_eigen(), omega.to_eigen());
  if (!std::isfinite(f)) {
    throw DomainError(obj.kind == ObjectiveKind::gaussian ? "omega is not positive definite"
                                                          : "omega has a non-positive diagonal entry");
  }
  return f;
}

Eigen::VectorXd gradient(const Objective& obj, const Graph& g, const SymMatrix& omega) {
  check_sizes(obj, g);
  const MatrixXd w = omega.to_eigen();
  if (!std::isfinite(value(obj.kind, obj.s.to_eigen(), w))) throw DomainError("gradient: omega outside the domain");
  MatrixXd winv;
  if (obj.kind == ObjectiveKind::gaussian) winv = inverse_or_throw(w);
  return Coordinates(g).project(gradient_matrix(obj.kind, obj.s.to_eigen(), w, &winv));
}

SymMatrix initial_point(const Objective& obj, double eps) {
  const std::size_t p = obj.s.order();
  std::vector<double> d(p);
  for (std::size_t i = 0; i < p; ++i) {
    d[i] = obj.kind == ObjectiveKind::gaussian ? 1.0 / (obj.s(i, i) + eps) : 1.0 / std::sqrt(obj.s(i, i) + eps);
  }
  return SymMatrix::diagonal(d);
}

double coordinate_sweep(const Objective& obj, const Graph& g, SymMatrix& omega) {
  check_sizes(obj, g);
  if (!is_pseudo(obj.kind)) throw std::invalid_argument("coordinate_sweep: only for concord and conspace");
  const MatrixXd a = obj.s.to_eigen();
  MatrixXd w = omega.to_eigen();
  MatrixXd aw = a * w;
  const double u = sweep(obj.kind, a, g, w, aw);
  if (std::isfinite(u)) omega = SymMatrix::symmetrized(w);
  return u;
}

FitResult fit(const Objective& obj, const Graph& g, const FitOptions& opts) {
  check_sizes(obj, g);
  if (obj.kind == ObjectiveKind::space_uniform) {
    throw std::invalid_argument("fit: the uniform-weight objective is unbounded below; see demonstrate_space_unbounded");
  }
  const MatrixXd a = obj.s.to_eigen();
  const Coordinates coords(g);
  MatrixXd w = initial_point(obj).to_eigen();
  double f = value(obj.kind, a, w);
  FitResult res;
  res.status = FitStatus::maxiter;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    res.iterations = it;
    double moved = 0.0;
    if (is_pseudo(obj.kind)) {
      MatrixXd aw = a * w;
      moved = sweep(obj.kind, a, g, w, aw);
      if (!std::isfinite(moved)) {
        res.status = FitStatus::diverged;
        break;
      }
      f = value(obj.kind, a, w);
    }
    if (obj.kind == ObjectiveKind::gaussian || opts.newton) {
      moved = std::max(moved, newton_step(obj.kind, a, coords, w, f));
    }
    if (w.norm() > opts.divergence_threshold || f < -opts.divergence_threshold) {
      res.status = FitStatus::diverged;
      break;
    }
    if (moved < opts.tol) {
      res.status = FitStatus::converged;
      break;
    }
  }
  res.omega = SymMatrix::symmetrized(w);
  res.objective_value = f;
  return res;
}

std::vector<double> demonstrate_space_unbounded(const Graph& g, const Eigen::MatrixXd& x,
                                                const std::vector<double>& t_values) {
  if (static_cast<std::size_t>(x.cols()) != g.order()) throw std::invalid_argument("data and graph differ in p");
  const double n = static_cast<double>(x.rows());
  const Index p = x.cols();
  std::vector<double> out;
  double prev = 0.0;
  for (std::size_t k = 0; k < t_values.size(); ++k) {
    const double t = t_values[k];
    if (!(t > 0)) throw std::invalid_argument("demonstrate_space_unbounded: t must be positive");
    if (k > 0 && !(t > prev)) throw std::invalid_argument("demonstrate_space_unbounded: t must increase");
    prev = t;
    const MatrixXd w = t * MatrixXd::Identity(p, p);
    double f = 0.0;
    for (Index i = 0; i < p; ++i) {
      VectorXd r = w(i, i) * x.col(i);
      for (Index j = 0; j < p; ++j)
        if (j != i && w(i, j) != 0.0) r -= w(i, j) * x.col(j);
      f += -0.5 * n * std::log(w(i, i)) + r.squaredNorm() / (w(i, i) * w(i, i));
    }
    out.push_back(f);
  }
  return out;
}

double gaussian_stationarity_residual(const Graph& g, const SymMatrix& s, const SymMatrix& omega) {
  if (s.order() != g.order() || omega.order() != g.order()) throw std::invalid_argument("size mismatch");
  const MatrixXd inv = inverse_or_throw(omega.to_eigen());
  double r = 0.0;
  for (std::size_t i = 0; i < g.order(); ++i) r = std::max(r, std::abs(s(i, i) - inv(ix(i), ix(i))));
  for (const Edge& e : g.edges()) r = std::max(r, std::abs(s(e.u, e.v) - inv(ix(e.u), ix(e.v))));
  return r;
}

}  // namespace glrank
