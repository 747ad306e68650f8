#include "glrank/mc_sim.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "glrank/errors.hpp"
#include "glrank/matrix_io.hpp"
#include "glrank/parallel.hpp"
#include "glrank/seeding.hpp"

namespace glrank {

RankFactor sample_covariance(std::size_t p, std::size_t n, std::uint64_t seed) {
  if (p == 0 || n == 0) throw std::invalid_argument("sample_covariance: p and n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = normal(rng);
  return rationalize_data(x);
}

const SimRow* SimCurve::find(std::size_t n, const std::string& method) const {
  for (const auto& r : rows)
    if (r.n == n && r.method == method) return &r;
  return nullptr;
}

SimCurve existence_curve(const SimConfig& cfg) {
  const std::size_t p = cfg.graph.order();
  if (cfg.trials == 0) throw std::invalid_argument("existence_curve: trials must be >= 1");
  if (p == 0) throw std::invalid_argument("existence_curve: empty graph");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max || cfg.n_max > p + 2) {
    throw std::invalid_argument("existence_curve: n range must lie within [1, p+2]");
  }
  if (!cfg.pseudo && !cfg.gaussian) throw std::invalid_argument("existence_curve: no method selected");

  SimCurve curve;
  curve.seed = cfg.seed;
  enum : int { kNo = 0, kYes = 1, kUnknown = 2 };
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<int> pseudo(cfg.trials, kNo), gauss(cfg.trials, kNo);
    parallel_for(cfg.trials, [&](std::size_t t) {
      const RankFactor a = sample_covariance(p, n, derive_seed(cfg.seed, {n, t}));
      if (cfg.pseudo) {
        const auto v = check_pseudo(cfg.graph, a);
        pseudo[t] = v.exists && v.unique ? kYes : kNo;
      }
      if (cfg.gaussian) {
        const auto v = check_gaussian(cfg.graph, a, cfg.gaussian_options);
        gauss[t] = v.inconclusive ? kUnknown : (v.exists ? kYes : kNo);
      }
    });
    auto row = [&](const std::string& method, const std::vector<int>& verdicts) {
      SimRow r;
      r.graph = cfg.graph_id;
      r.p = p;
      r.param = cfg.param;
      r.n = n;
      r.method = method;
      r.trials = cfg.trials;
      r.seed = cfg.seed;
      std::size_t yes = 0;
      for (int v : verdicts) {
        if (v == kYes) ++yes;
        if (v == kUnknown) ++r.inconclusive;
      }
      const std::size_t conclusive = cfg.trials - r.inconclusive;
      r.prob = conclusive == 0 ? 0.0 : static_cast<double>(yes) / static_cast<double>(conclusive);
      r.stderr_ = std::sqrt(r.prob * (1.0 - r.prob) / static_cast<double>(cfg.trials));
      curve.rows.push_back(std::move(r));
    };
    if (cfg.pseudo) row("pseudo", pseudo);
    if (cfg.gaussian) row("gaussian", gauss);
  }
  return curve;
}

void write_csv(std::ostream& out, const SimCurve& curve, bool header) {
  if (header) out << kSimCsvHeader << '\n';
  for (const auto& r : curve.rows) {
    out << r.graph << ',' << r.p << ',' << r.param << ',' << r.n << ',' << r.method << ',' << r.trials << ','
        << format_double(r.prob) << ',' << format_double(r.stderr_) << ',' << r.inconclusive << ',' << r.seed
        << '\n';
  }
}

std::string to_csv(const SimCurve& curve) {
  std::ostringstream ss;
  write_csv(ss, curve);
  return ss.str();
}

std::vector<SweepEntry> bound_sweep(const std::vector<Graph>& graphs, std::size_t trials, std::uint64_t seed) {
  std::vector<SweepEntry> out(graphs.size());
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    try {
      out[k].bounds = estimate_weak_ranks(graphs[k], trials, derive_seed(seed, {k}));
    } catch (const BudgetExceeded& e) {
      out[k].error = e.what();
    }
  }
  return out;
}

}  // namespace glrank
