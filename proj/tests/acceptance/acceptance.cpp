// Acceptance harness: one PASS/FAIL line per criterion.
//
// Usage: glrank_acceptance [--criterion N]...   (default: all)
//
// Known failures are listed in kExpectedFailures with the reason. They still print FAIL.
// The exit code is 0 only when every criterion's failing checks match that table exactly,
// so an unexpected failure and an unexpected pass both break the build.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glrank/certify.hpp"
#include "glrank/errors.hpp"
#include "glrank/estimators.hpp"
#include "glrank/graph.hpp"
#include "glrank/graph_invariants.hpp"
#include "glrank/mc_sim.hpp"
#include "glrank/seeding.hpp"
#include "glrank/sym_matrix.hpp"

using namespace glrank;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct ExpectedFailure {
  int criterion;
  std::string check;
  std::string reason;
};

// Detection-power entries quote frequencies measured over thousands of independent draws.
const std::vector<ExpectedFailure> kExpectedFailures = {
    {1, "complete_bipartite2x3",
     "table value 2 is below kappa*+1 = 3; rank-2 draws fail with positive probability (exact certificates)"},
    {1, "complete_bipartite2x4",
     "table value 2 is below kappa*+1 = 3; rank-2 draws fail with positive probability (exact certificates)"},
    {1, "cycle6", "rank-2 Gaussian nonexistence on C6 has frequency ~1/60; 50 trials miss it with probability ~0.42"},
    {1, "cycle7", "rank-2 Gaussian nonexistence on C7 has frequency ~1/180; 50 trials miss it with probability ~0.75"},
    {3, "complete_bipartite3x3",
     "kappa*+1 = 4 but the generic completion rank is 3, so gamma <= rho <= 3 (lower bound fails)"},
    {3, "er8#26", "kappa*+1 = 4 but the generic completion rank is 3 (same conflict as K33)"},
    {3, "er8#28", "kappa*+1 = 4 but the generic completion rank is 3 (same conflict as K33)"},
    {3, "cycle6", "rank-2 Gaussian nonexistence on C6 has frequency ~1/60; 30 trials miss it with probability ~0.60"},
    {3, "cycle7", "rank-2 Gaussian nonexistence on C7 has frequency ~1/180; 30 trials miss it with probability ~0.84"},
    {3, "er8#35", "rank-2 Gaussian nonexistence has frequency ~0.007; 30 trials miss it with probability ~0.80"},
    {7, "cycle10 gaussian n=2 prob<1",
     "rank-2 Gaussian nonexistence falls steeply with cycle length (C6 ~1/60, C7 ~1/180); 200 draws on C10 saw none"},
};

struct Report {
  std::vector<std::string> failed;  // check ids
  std::vector<std::string> notes;

  void check(bool ok, const std::string& id, const std::string& detail = {}) {
    if (!ok) {
      failed.push_back(id);
      if (!detail.empty()) notes.push_back(id + ": " + detail);
    }
  }
};

// ---------------------------------------------------------------- shared fixtures

struct Instance {
  Graph g;
  RankFactor a;
};

// 100 random (graph, rank) pairs with p <= 8, shared by criteria 4 and 6.
std::vector<Instance> random_factor_instances() {
  std::mt19937_64 rng(derive_seed(kSeed, {4}));
  std::vector<Instance> out;
  for (std::size_t t = 0; t < 100; ++t) {
    const std::size_t p = 4 + t % 5;
    const Graph g = erdos_renyi_connected(p, 0.5, rng());
    const std::size_t r = 1 + rng() % (p - 1);
    out.push_back({g, random_integer_factor(r, p, rng, 5)});
  }
  return out;
}

struct CurveSet {
  std::string name;
  Graph g;
  SimCurve curve;
};

std::vector<CurveSet> cycle_curves() {
  std::vector<CurveSet> out;
  for (std::size_t p : {6, 10}) {
    SimConfig cfg;
    cfg.graph_id = "cycle" + std::to_string(p);
    cfg.graph = cycle_graph(p);
    cfg.n_min = 1;
    cfg.n_max = 5;
    cfg.trials = 200;
    cfg.seed = kSeed;
    out.push_back({cfg.graph_id, cfg.graph, existence_curve(cfg)});
  }
  return out;
}

constexpr std::size_t kErdosRenyiOrder = 12;
constexpr std::size_t kErdosRenyiTrials = 50;
constexpr std::uint64_t kErdosRenyiGraphSeed = 99;

std::vector<CurveSet> erdos_renyi_curves() {
  std::vector<CurveSet> out;
  for (double pe : {0.3, 0.5, 0.8}) {
    SimConfig cfg;
    std::ostringstream label;
    label << "pe=" << pe;
    cfg.graph_id = "er" + std::to_string(kErdosRenyiOrder);
    cfg.param = label.str();
    cfg.graph = erdos_renyi_connected(kErdosRenyiOrder, pe, kErdosRenyiGraphSeed);
    cfg.n_min = 1;
    cfg.n_max = kErdosRenyiOrder + 2;
    cfg.trials = kErdosRenyiTrials;
    cfg.seed = kSeed;
    out.push_back({cfg.graph_id + " " + cfg.param, cfg.graph, existence_curve(cfg)});
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

// Ordering between methods at each n, within two combined standard errors.
void check_ordering(Report& rep, const CurveSet& c) {
  for (const auto& row : c.curve.rows) {
    if (row.method != "pseudo") continue;
    const SimRow* ga = c.curve.find(row.n, "gaussian");
    const double band = 2 * std::sqrt(row.stderr_ * row.stderr_ + ga->stderr_ * ga->stderr_);
    rep.check(row.prob <= ga->prob + band, c.name + " ordering n=" + std::to_string(row.n),
              "pseudo " + fmt(row.prob) + " > gaussian " + fmt(ga->prob));
  }
}

void check_monotone(Report& rep, const CurveSet& c) {
  for (const char* m : {"pseudo", "gaussian"}) {
    for (std::size_t n = c.curve.rows.front().n; c.curve.find(n + 1, m); ++n) {
      const SimRow* a = c.curve.find(n, m);
      const SimRow* b = c.curve.find(n + 1, m);
      rep.check(b->prob >= a->prob - 2 * (a->stderr_ + b->stderr_),
                c.name + " " + m + " monotone n=" + std::to_string(n),
                fmt(a->prob) + " -> " + fmt(b->prob));
    }
  }
}

void check_no_inconclusive(Report& rep, const CurveSet& c) {
  std::size_t inc = 0;
  for (const auto& r : c.curve.rows) inc += r.inconclusive;
  rep.check(inc == 0, c.name + " inconclusive", std::to_string(inc) + " inconclusive Gaussian verdicts");
}

// ---------------------------------------------------------------- criteria

Report criterion1() {
  Report rep;
  const std::map<std::string, std::size_t> table = {
      {"path4", 2}, {"path5", 2}, {"path6", 2}, {"path7", 2},
      {"star4", 2}, {"star5", 2}, {"star6", 2}, {"star7", 2},
      {"cycle4", 3}, {"cycle5", 3}, {"cycle6", 3}, {"cycle7", 3},
      {"complete3", 3}, {"complete4", 4}, {"complete5", 5}, {"complete6", 6},
      {"complete_bipartite2x3", 2}, {"complete_bipartite3x3", 3}, {"complete_bipartite2x4", 2},
      {"grid3x3", 3}, {"grid3x4", 3},
  };
  WeakRankOptions opts;
  opts.compute_rbar = false;
  opts.compute_gcr = false;
  for (const auto& [name, g] : standard_catalog()) {
    const auto it = table.find(name);
    if (it == table.end()) continue;
    const RankBounds b = estimate_weak_ranks(g, 50, kSeed, opts);
    rep.check(b.weak_rank_estimate == it->second && b.gaussian_rank_estimate == it->second, name,
              "rho-hat " + std::to_string(b.weak_rank_estimate) + ", gamma-hat " +
                  std::to_string(b.gaussian_rank_estimate) + ", table " + std::to_string(it->second));
    rep.check(b.gaussian_inconclusive == 0, name + " inconclusive");
  }
  return rep;
}

Report criterion2() {
  Report rep;
  WeakRankOptions opts;
  opts.compute_rbar = false;
  opts.compute_gcr = false;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const std::size_t p = 5 + k % 4;
    const Graph g = random_chordal(p, 2 + k % 3, derive_seed(kSeed, {2, k}));
    const std::string id = "chordal#" + std::to_string(k);
    const std::size_t omega = clique_number(g);
    const RankBounds b = estimate_weak_ranks(g, 50, derive_seed(kSeed, {2, k, 1}), opts);
    rep.check(b.gaussian_rank_estimate == omega, id + " gamma-hat",
              "gamma-hat " + std::to_string(b.gaussian_rank_estimate) + ", clique number " + std::to_string(omega));
    std::size_t exists_at_omega = 0;
    std::size_t fails_below = 0;
    std::size_t not_general = 0;
    for (std::uint64_t t = 0; t < 50; ++t) {
      const RankFactor a = sample_covariance(p, omega, derive_seed(kSeed, {2, k, 2, t}));
      if (!general_position(a)) ++not_general;
      const ExistenceVerdict v = check_gaussian(g, a);
      exists_at_omega += v.exists;
      if (omega > 1) {
        const ExistenceVerdict w = check_gaussian(g, sample_covariance(p, omega - 1, derive_seed(kSeed, {2, k, 3, t})));
        fails_below += !w.exists && !w.inconclusive;
      }
    }
    rep.check(not_general == 0, id + " general position", std::to_string(not_general) + " draws not in general position");
    rep.check(exists_at_omega == 50, id + " n=omega", std::to_string(exists_at_omega) + "/50 exist");
    if (omega > 1) rep.check(fails_below >= 1, id + " n=omega-1", "no nonexistence in 50 draws");
  }
  return rep;
}

Report criterion3() {
  Report rep;
  std::vector<std::pair<std::string, Graph>> graphs;
  for (auto& [name, g] : standard_catalog()) graphs.emplace_back(name, g);
  for (std::uint64_t k = 0; k < 50; ++k)
    graphs.emplace_back("er8#" + std::to_string(k), erdos_renyi_connected(8, 0.4, derive_seed(kSeed, {3, k})));
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const auto& [name, g] = graphs[k];
    const RankBounds b = estimate_weak_ranks(g, 30, derive_seed(kSeed, {3, 1000 + k}));
    const auto v = b.violations();
    std::string detail;
    for (const auto& s : v) detail += (detail.empty() ? "" : "; ") + s;
    rep.check(v.empty(), name, detail);
    rep.check(b.gaussian_inconclusive == 0, name + " inconclusive");
  }
  return rep;
}

Report criterion4() {
  Report rep;
  std::size_t k = 0;
  std::size_t nonexistent = 0;
  for (const auto& [g, a] : random_factor_instances()) {
    const std::string id = "instance#" + std::to_string(k++);
    const bool exists = check_pseudo(g, a).exists;
    nonexistent += !exists;
    const SymMatrix s = a.to_sym();
    const FitResult c = fit(Objective(ObjectiveKind::concord, s), g);
    const FitResult r = fit(Objective(ObjectiveKind::conspace, s), g);
    const FitStatus want = exists ? FitStatus::converged : FitStatus::diverged;
    rep.check(c.status == want, id + " concord", "status " + to_string(c.status) + ", verdict exists=" + std::to_string(exists));
    rep.check(r.status == want, id + " conspace", "status " + to_string(r.status) + ", verdict exists=" + std::to_string(exists));
    rep.check(c.status == r.status, id + " concord=conspace");
  }
  rep.check(nonexistent > 0 && nonexistent < 100, "verdict mix", std::to_string(nonexistent) + " nonexistent of 100");
  return rep;
}

Report criterion5() {
  Report rep;
  // Bipartite 4-cycle 0-2-1-3-0 with X rows (1,-1,0,0) and (0,0,1,-1): the all-ones edge
  // matrix Phi satisfies X Phi = 0 and has zero diagonal.
  const std::vector<Edge> e{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const Graph g(4, e);
  const RankFactor a = RankFactor::from_rows(QMatrix::from_ints(2, 4, {1, -1, 0, 0, 0, 0, 1, -1}));
  const ExistenceVerdict v = check_pseudo(g, a);
  rep.check(v.exists && v.zero_diag_dim >= 1, "instance", "exists=" + std::to_string(v.exists) +
                                                          " zero_diag_dim=" + std::to_string(v.zero_diag_dim));
  for (auto kind : {ObjectiveKind::concord, ObjectiveKind::conspace}) {
    const Objective obj(kind, a.to_sym());
    const FitResult r = fit(obj, g);
    rep.check(r.status == FitStatus::converged, to_string(kind) + " converged");
    for (double t : {-1.0, 0.5, 1.0, 2.0}) {
      SymMatrix moved = r.omega;
      for (const Edge& ed : g.edges()) moved.set(ed.u, ed.v, r.omega(ed.u, ed.v) + t);
      const double gap = std::abs(evaluate(obj, moved) - r.objective_value);
      rep.check(gap <= 1e-9, to_string(kind) + " t=" + fmt(t), "gap " + fmt(gap));
    }
  }
  return rep;
}

Report criterion6() {
  Report rep;
  std::size_t k = 0;
  for (const auto& [g, a] : random_factor_instances()) {
    const std::string id = "instance#" + std::to_string(k++);
    const ExistenceVerdict ps = check_pseudo(g, a);
    const ExistenceVerdict ga = check_gaussian(g, a);
    rep.check(!ga.inconclusive, id + " inconclusive");
    rep.check(!ps.exists || ga.exists, id + " pseudo=>gaussian");
  }
  for (const auto& c : cycle_curves()) check_ordering(rep, c);
  for (const auto& c : erdos_renyi_curves()) check_ordering(rep, c);
  return rep;
}

Report criterion7() {
  Report rep;
  for (const auto& c : cycle_curves()) {
    check_no_inconclusive(rep, c);
    check_monotone(rep, c);
    check_ordering(rep, c);
    for (const char* m : {"pseudo", "gaussian"}) {
      for (std::size_t n = 3; n <= 5; ++n) {
        const SimRow* r = c.curve.find(n, m);
        rep.check(r->prob == 1.0, c.name + " " + m + " n=" + std::to_string(n) + " saturated", "prob " + fmt(r->prob));
      }
      const SimRow* r2 = c.curve.find(2, m);
      rep.check(r2->prob < 1.0, c.name + " " + m + " n=2 prob<1", "prob " + fmt(r2->prob));
    }
  }
  WeakRankOptions opts;
  opts.compute_rbar = false;
  opts.compute_gcr = false;
  for (const auto& c : erdos_renyi_curves()) {
    check_no_inconclusive(rep, c);
    check_monotone(rep, c);
    check_ordering(rep, c);
    const RankBounds b = estimate_weak_ranks(c.g, 30, kSeed, opts);
    for (const auto& row : c.curve.rows) {
      const std::size_t from = row.method == "pseudo" ? b.weak_rank_estimate : b.gaussian_rank_estimate;
      if (row.n < from) continue;
      rep.check(row.prob == 1.0, c.name + " " + row.method + " n=" + std::to_string(row.n) + " saturated",
                "prob " + fmt(row.prob) + " at n >= " + std::to_string(from));
    }
  }
  return rep;
}

Report criterion8() {
  Report rep;
  std::vector<double> ts;
  for (double t = 1; t <= 1024; t *= 2) ts.push_back(t);
  for (std::uint64_t k = 0; k < 10; ++k) {
    std::mt19937_64 rng(derive_seed(kSeed, {8, k}));
    std::normal_distribution<double> n01;
    const std::size_t p = 4 + k % 4;
    const std::size_t n = 2 + k % 5;
    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = n01(rng);
    const auto v = demonstrate_space_unbounded(erdos_renyi_connected(p, 0.5, rng()), x, ts);
    bool ok = true;
    for (std::size_t i = v.size() - 5; i < v.size(); ++i) ok = ok && v[i] < v[i - 1];
    rep.check(ok, "dataset#" + std::to_string(k));
  }
  return rep;
}

Report criterion9() {
  Report rep;
  auto maxdiff = [](const SymMatrix& a, const Eigen::MatrixXd& b) { return (a.to_eigen() - b).cwiseAbs().maxCoeff(); };
  {
    const FitResult r = fit(Objective(ObjectiveKind::concord, SymMatrix::identity(5)), complete_graph(5));
    rep.check(maxdiff(r.omega, Eigen::MatrixXd::Identity(5, 5)) <= 1e-6, "concord K5 identity");
  }
  std::mt19937_64 rng(derive_seed(kSeed, {9}));
  std::uniform_real_distribution<double> u(0.2, 5.0);
  std::normal_distribution<double> n01;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const std::size_t p = 3 + k % 6;
    const Graph g = erdos_renyi_connected(p, 0.5, rng());
    std::vector<double> d(p);
    for (auto& x : d) x = u(rng);
    const FitResult r = fit(Objective(ObjectiveKind::concord, SymMatrix::diagonal(d)), g);
    Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < p; ++i) expect(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1 / std::sqrt(d[i]);
    rep.check(maxdiff(r.omega, expect) <= 1e-6, "concord diagonal#" + std::to_string(k));
  }
  for (std::uint64_t k = 0; k < 5; ++k) {
    Eigen::MatrixXd x(8, 5);
    for (Eigen::Index i = 0; i < 8; ++i)
      for (Eigen::Index j = 0; j < 5; ++j) x(i, j) = n01(rng);
    const SymMatrix s = SymMatrix::symmetrized(x.transpose() * x / 8.0);
    const FitResult r = fit(Objective(ObjectiveKind::gaussian, s), complete_graph(5));
    const double err = maxdiff(r.omega, s.to_eigen().inverse());
    rep.check(err <= 1e-6, "gaussian K5#" + std::to_string(k), "max error " + fmt(err));
  }
  for (auto kind : {ObjectiveKind::concord, ObjectiveKind::conspace}) {
    std::size_t bad = 0;
    for (int t = 0; t < 50; ++t) {
      const std::size_t p = 4 + static_cast<std::size_t>(t) % 4;
      const Graph g = erdos_renyi_connected(p, 0.5, rng());
      Eigen::MatrixXd x(static_cast<Eigen::Index>(p + 2), static_cast<Eigen::Index>(p));
      for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = n01(rng);
      const Objective obj(kind, SymMatrix::symmetrized(x.transpose() * x / static_cast<double>(x.rows())));
      SymMatrix w(p);
      for (const Edge& e : g.edges()) w.set(e.u, e.v, 0.5 * n01(rng));
      for (std::size_t i = 0; i < p; ++i) w.set(i, i, 0.5 + u(rng));
      const Eigen::VectorXd grad = gradient(obj, g, w);
      const double h = 1e-6;
      for (std::size_t c = 0; c < g.size() + p; ++c) {
        const std::size_t i = c < g.size() ? g.edges()[c].u : c - g.size();
        const std::size_t j = c < g.size() ? g.edges()[c].v : c - g.size();
        SymMatrix up = w, dn = w;
        up.set(i, j, w(i, j) + h);
        dn.set(i, j, w(i, j) - h);
        const double fd = (evaluate(obj, up) - evaluate(obj, dn)) / (2 * h);
        const double an = grad(static_cast<Eigen::Index>(c));
        bad += std::abs(fd - an) > 1e-4 * std::max(std::abs(fd), 1e-8);
      }
    }
    rep.check(bad == 0, to_string(kind) + " gradient", std::to_string(bad) + " coordinates off");
  }
  return rep;
}

Report criterion10() {
  Report rep;
  auto same_across_seeds = [&](const std::string& id, const Graph& g, std::size_t want) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const std::size_t ell = generic_completion_rank(g, 50, derive_seed(kSeed, {10, s}));
      rep.check(ell == want, id + " seed#" + std::to_string(s), "gcr " + std::to_string(ell) + ", want " + std::to_string(want));
    }
  };
  for (std::size_t p = 1; p <= 6; ++p) same_across_seeds("complete" + std::to_string(p), complete_graph(p), p);
  for (std::uint64_t k = 0; k < 5; ++k) same_across_seeds("tree#" + std::to_string(k), random_tree(4 + k, derive_seed(kSeed, {10, 100 + k})), 2);
  for (std::size_t p = 4; p <= 7; ++p) same_across_seeds("cycle" + std::to_string(p), cycle_graph(p), 3);
  for (const auto& [name, g] : standard_catalog()) {
    const RankBounds b = estimate_weak_ranks(g, 30, kSeed);
    rep.check(b.rbar <= b.gcr, name + " rbar<=gcr", "rbar " + std::to_string(b.rbar) + ", gcr " + std::to_string(b.gcr));
  }
  return rep;
}

Report criterion11() {
  Report rep;
  std::mt19937_64 rng(derive_seed(kSeed, {11}));
  std::size_t nonexistent = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    const std::size_t p = 3 + t % 6;
    const Graph g = erdos_renyi_connected(p, 0.3 + 0.1 * static_cast<double>(t % 5), rng());
    const RankFactor a = random_integer_factor(1 + rng() % p, p, rng, 4);
    const ExistenceVerdict x = check_pseudo(g, a);
    const ExistenceVerdict y = check_pseudo_recursive(g, a);
    nonexistent += !x.exists;
    const bool same = x.exists == y.exists && x.unique == y.unique && x.kernel_dim == y.kernel_dim &&
                      x.zero_diag_dim == y.zero_diag_dim;
    rep.check(same, "instance#" + std::to_string(t));
    if (!y.exists) rep.check(y.certificate && valid_pseudo_certificate(g, a, *y.certificate), "instance#" + std::to_string(t) + " certificate");
  }
  rep.check(nonexistent > 0 && nonexistent < 200, "verdict mix");
  return rep;
}

struct Criterion {
  int id;
  const char* title;
  Report (*run)();
};

const std::vector<Criterion> kCriteria = {
    {1, "catalog weak ranks match the reference table", criterion1},
    {2, "chordal graphs: Gaussian rank equals clique number", criterion2},
    {3, "bound chain kappa*+1 <= gamma <= rho <= gcr <= delta+1", criterion3},
    {4, "pseudo fit status agrees with the exact verdict", criterion4},
    {5, "affine minimiser set along a zero-diagonal kernel element", criterion5},
    {6, "Gaussian existence dominates pseudo existence", criterion6},
    {7, "existence curves: cycles and p = 12 Erdos-Renyi", criterion7},
    {8, "uniform-weight SPACE is unbounded below", criterion8},
    {9, "solver correctness and gradients", criterion9},
    {10, "generic completion rank values and determinism", criterion10},
    {11, "LP and face-recursion pseudo certifiers agree", criterion11},
};

bool evaluate_criterion(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    rep = c.run();
  } catch (const std::exception& e) {
    rep.check(false, "exception", e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::set<std::string> expected, failed(rep.failed.begin(), rep.failed.end());
  std::map<std::string, std::string> reasons;
  for (const auto& x : kExpectedFailures) {
    if (x.criterion != c.id) continue;
    expected.insert(x.check);
    reasons[x.check] = x.reason;
  }

  std::ostringstream line;
  line << (failed.empty() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed;
  line.precision(1);
  line << secs << " s)";
  std::cout << line.str() << '\n';
  for (const auto& n : rep.notes) std::cout << "    " << n << '\n';
  bool matches = true;
  for (const auto& f : failed) {
    if (expected.count(f)) {
      std::cout << "    known failure " << f << ": " << reasons[f] << '\n';
    } else {
      std::cout << "    unexpected failure " << f << '\n';
      matches = false;
    }
  }
  for (const auto& x : expected) {
    if (!failed.count(x)) {
      std::cout << "    known failure did not occur: " << x << '\n';
      matches = false;
    }
  }
  std::cout.flush();
  return matches;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> which;
  app.add_option("--criterion", which, "Criterion number (repeatable); default all")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  for (const auto& c : kCriteria) {
    if (!which.empty() && std::find(which.begin(), which.end(), c.id) == which.end()) continue;
    ok = evaluate_criterion(c) && ok;
  }
  return ok ? 0 : 1;
}
