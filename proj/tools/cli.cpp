#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glrank/certify.hpp"
#include "glrank/errors.hpp"
#include "glrank/estimators.hpp"
#include "glrank/graph.hpp"
#include "glrank/graph_invariants.hpp"
#include "glrank/graph_io.hpp"
#include "glrank/matrix_io.hpp"
#include "glrank/mc_sim.hpp"
#include "glrank/rank_factor.hpp"

namespace glrank::cli {

namespace {

using nlohmann::ordered_json;

// Thrown by a handler for an inconclusive verdict after its output has been written.
struct Inconclusive {};

Graph load_graph(const std::string& path) { return read_edge_list_file(path); }

QMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return read_matrix_csv(in);
}

QMatrix load_symmetric(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return read_symmetric_csv(in);
}

void require_order(const Graph& g, std::size_t cols, const std::string& what) {
  if (cols != g.order()) {
    throw std::invalid_argument(what + " has " + std::to_string(cols) + " columns but the graph has " +
                                std::to_string(g.order()) + " vertices");
  }
}

ordered_json fraction_matrix(const QMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_fraction_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json verdict_json(const ExistenceVerdict& v, bool gaussian) {
  ordered_json j;
  j["exists"] = v.exists;
  j["unique"] = v.unique;
  j["kernel_dim"] = v.kernel_dim;
  j["zero_diag_dim"] = v.zero_diag_dim;
  if (gaussian) j["inconclusive"] = v.inconclusive;
  j["method"] = v.method;
  if (v.certificate) j["certificate"] = fraction_matrix(*v.certificate);
  if (v.psd_witness) {
    ordered_json rows = ordered_json::array();
    const auto& w = *v.psd_witness;
    for (std::size_t i = 0; i < w.order(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < w.order(); ++k) row.push_back(w(i, k));
      rows.push_back(std::move(row));
    }
    j["psd_witness"] = std::move(rows);
  }
  return j;
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json invariants_json(const GraphInvariants& inv) {
  ordered_json j;
  j["degeneracy"] = inv.degeneracy;
  j["max_degree"] = inv.max_degree;
  j["disconnection"] = optional_json(inv.disconnection);
  j["subgraph_connectivity"] = optional_json(inv.subgraph_connectivity);
  j["clique_number"] = optional_json(inv.clique_number);
  j["chordal"] = inv.chordal;
  j["budget_notes"] = inv.budget_notes;
  return j;
}

ordered_json bounds_json(const RankBounds& b) {
  ordered_json j;
  j["kappa_star_plus1"] = b.kappa_star_plus1;
  j["gaussian_rank_estimate"] = b.gaussian_rank_estimate;
  j["weak_rank_estimate"] = b.weak_rank_estimate;
  j["gcr"] = b.gcr;
  j["degeneracy_plus1"] = b.degeneracy_plus1;
  j["rbar"] = b.rbar;
  j["trials"] = b.trials;
  j["seed"] = b.seed;
  j["gaussian_inconclusive"] = b.gaussian_inconclusive;
  j["violations"] = b.violations();
  return j;
}

struct RanksArgs {
  std::string graph;
  std::uint64_t seed = 0;
  std::size_t trials = 50;
  bool no_rbar = false;
};

void cmd_ranks(const RanksArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  if (a.trials == 0) throw std::invalid_argument("--trials must be >= 1");
  // The exponential invariants decide the budget before any sampling starts.
  const GraphInvariants inv = invariants(g);
  if (!inv.budget_notes.empty()) throw BudgetExceeded(inv.budget_notes.front());
  WeakRankOptions opts;
  opts.compute_rbar = !a.no_rbar;
  const RankBounds b = estimate_weak_ranks(g, a.trials, a.seed, opts);
  ordered_json j;
  j["p"] = g.order();
  j["edges"] = g.size();
  j["invariants"] = invariants_json(inv);
  j["bounds"] = bounds_json(b);
  out << j.dump(2) << '\n';
}

struct CertifyArgs {
  std::string graph;
  std::string matrix;
  bool data = false;
  double tol = GaussianOptions{}.tol;
  std::size_t max_iter = GaussianOptions{}.max_iter;
};

void cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  RankFactor factor;
  if (a.data) {
    QMatrix x = load_matrix(a.matrix);
    require_order(g, x.cols(), "data matrix");
    if (x.rows() == 0) throw std::invalid_argument("data matrix has no rows");
    factor = RankFactor::from_data(std::move(x));
  } else {
    const QMatrix m = load_symmetric(a.matrix);
    require_order(g, m.cols(), "matrix");
    factor = RankFactor::from_psd(m);
  }
  GaussianOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  const ExistenceVerdict pseudo = check_pseudo(g, factor);
  const ExistenceVerdict gauss = check_gaussian(g, factor, opts);
  ordered_json j;
  j["p"] = g.order();
  j["rank"] = factor.rank();
  j["pseudo"] = verdict_json(pseudo, false);
  j["gaussian"] = verdict_json(gauss, true);
  out << j.dump(2) << '\n';
  if (gauss.inconclusive) throw Inconclusive{};
}

struct FitArgs {
  std::string method;
  double tol = FitOptions{}.tol;
  std::size_t max_iter = FitOptions{}.max_iter;
  std::string graph;
  std::string matrix;
  std::string data;
  std::string out;
};

void cmd_fit(const FitArgs& a, std::ostream& out) {
  const ObjectiveKind kind = parse_objective_kind(a.method);
  if (kind == ObjectiveKind::space_uniform) {
    throw std::invalid_argument("space_uniform has no minimiser; fit accepts concord, conspace or gaussian");
  }
  if (!(a.tol > 0)) throw std::invalid_argument("--tol must be positive");
  const Graph g = load_graph(a.graph);
  SymMatrix s;
  if (!a.matrix.empty()) {
    const QMatrix m = load_symmetric(a.matrix);
    require_order(g, m.cols(), "matrix");
    s = to_sym(m);
  } else {
    const QMatrix x = load_matrix(a.data);
    require_order(g, x.cols(), "data matrix");
    if (x.rows() == 0) throw std::invalid_argument("data matrix has no rows");
    s = RankFactor::from_data(x).to_sym();
  }
  std::ofstream csv(a.out);
  if (!csv) throw std::invalid_argument("cannot write '" + a.out + "'");
  const Objective obj(kind, std::move(s));
  FitOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  const FitResult r = fit(obj, g, opts);
  write_matrix_csv(csv, r.omega);
  ordered_json j;
  j["method"] = a.method;
  j["status"] = to_string(r.status);
  j["objective"] = r.objective_value;
  j["iterations"] = r.iterations;
  j["omega"] = a.out;
  out << j.dump(2) << '\n';
}

struct GcrArgs {
  std::string graph;
  std::uint64_t seed = 0;
  std::size_t trials = 50;
  bool json = false;
};

void cmd_gcr(const GcrArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  if (a.trials == 0) throw std::invalid_argument("--trials must be >= 1");
  const std::size_t ell = generic_completion_rank(g, a.trials, a.seed);
  if (a.json) {
    ordered_json j;
    j["gcr"] = ell;
    j["trials"] = a.trials;
    j["seed"] = a.seed;
    out << j.dump(2) << '\n';
  } else {
    out << ell << '\n';
  }
}

struct SimulateArgs {
  std::string graph;
  std::string family;
  std::vector<long> params;
  std::optional<double> edge_prob;
  std::optional<std::uint64_t> graph_seed;
  std::string id;
  std::string label;
  std::size_t n_min = 1;
  std::optional<std::size_t> n_max;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::string methods = "both";
  std::string out;
};

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  SimConfig cfg;
  if (!a.graph.empty()) {
    cfg.graph = load_graph(a.graph);
    cfg.graph_id = a.id.empty() ? std::filesystem::path(a.graph).stem().string() : a.id;
  } else {
    FamilySpec spec{a.family, a.params, a.edge_prob, a.graph_seed};
    cfg.graph = generate(spec);
    cfg.graph_id = a.id.empty() ? a.family : a.id;
  }
  cfg.param = a.label;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max.value_or(cfg.graph.order() + 2);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.pseudo = a.methods != "gaussian";
  cfg.gaussian = a.methods != "pseudo";
  std::ofstream csv(a.out);
  if (!csv) throw std::invalid_argument("cannot write '" + a.out + "'");
  const SimCurve curve = existence_curve(cfg);
  write_csv(csv, curve);
  ordered_json j;
  j["rows"] = curve.rows.size();
  j["out"] = a.out;
  std::size_t inconclusive = 0;
  for (const auto& r : curve.rows) inconclusive += r.inconclusive;
  j["inconclusive"] = inconclusive;
  out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Existence ranks for graph-constrained precision matrix estimators", "glrank"};
  app.require_subcommand(1);
  app.fallthrough(false);

  RanksArgs ranks;
  auto* s_ranks = app.add_subcommand("ranks", "Graph invariants and rank bounds as JSON");
  s_ranks->add_option("graph", ranks.graph, "Edge-list file")->required();
  s_ranks->add_option("--seed", ranks.seed, "Master seed")->required();
  s_ranks->add_option("--trials", ranks.trials, "Random draws per rank")->capture_default_str();
  s_ranks->add_flag("--no-rbar", ranks.no_rbar, "Skip the face-recursion bound");

  CertifyArgs cert;
  auto* s_cert = app.add_subcommand("certify", "Pseudo-likelihood and Gaussian existence verdicts");
  s_cert->add_option("graph", cert.graph, "Edge-list file")->required();
  s_cert->add_option("matrix", cert.matrix, "PSD matrix CSV (or data with --data)")->required();
  s_cert->add_flag("--data", cert.data, "MATRIX is an n x p data matrix");
  s_cert->add_option("--tol", cert.tol, "Alternating-projection tolerance")->capture_default_str();
  s_cert->add_option("--max-iter", cert.max_iter, "Alternating-projection iterations")->capture_default_str();

  FitArgs fa;
  auto* s_fit = app.add_subcommand("fit", "Minimise an objective under the graph constraint");
  s_fit->add_option("--method", fa.method, "concord | conspace | gaussian")
      ->required()
      ->check(CLI::IsMember({"concord", "conspace", "gaussian"}));
  s_fit->add_option("--tol", fa.tol, "Convergence tolerance")->capture_default_str();
  s_fit->add_option("--max-iter", fa.max_iter, "Iteration cap")->capture_default_str();
  s_fit->add_option("--graph", fa.graph, "Edge-list file")->required();
  auto* o_matrix = s_fit->add_option("--matrix", fa.matrix, "PSD input matrix CSV");
  auto* o_data = s_fit->add_option("--data", fa.data, "n x p data CSV; uses S = X^T X / n");
  o_matrix->excludes(o_data);
  s_fit->add_option("--out", fa.out, "Where to write the dense Omega CSV")->required();

  GcrArgs gcr;
  auto* s_gcr = app.add_subcommand("gcr", "Generic completion rank");
  s_gcr->add_option("graph", gcr.graph, "Edge-list file")->required();
  s_gcr->add_option("--seed", gcr.seed, "Master seed")->required();
  s_gcr->add_option("--trials", gcr.trials, "Random coefficient draws")->capture_default_str();
  s_gcr->add_flag("--json", gcr.json, "JSON output");

  SimulateArgs sim;
  auto* s_sim = app.add_subcommand("simulate", "Monte Carlo existence curves as CSV");
  auto* o_graph = s_sim->add_option("--graph", sim.graph, "Edge-list file");
  auto* o_family = s_sim->add_option("--family", sim.family, "Generated family (cycle, erdos_renyi, ...)");
  o_graph->excludes(o_family);
  s_sim->add_option("--params", sim.params, "Family parameters")->expected(1, 2);
  s_sim->add_option("--edge-prob", sim.edge_prob, "Erdos-Renyi edge probability");
  s_sim->add_option("--graph-seed", sim.graph_seed, "Seed for random families");
  s_sim->add_option("--id", sim.id, "Graph label for the CSV");
  s_sim->add_option("--label", sim.label, "Free-form param column");
  s_sim->add_option("--n-min", sim.n_min)->capture_default_str();
  s_sim->add_option("--n-max", sim.n_max, "Default p + 2");
  s_sim->add_option("--trials", sim.trials)->capture_default_str();
  s_sim->add_option("--seed", sim.seed, "Master seed")->required();
  s_sim->add_option("--methods", sim.methods)->check(CLI::IsMember({"both", "pseudo", "gaussian"}))->capture_default_str();
  s_sim->add_option("--out", sim.out, "CSV destination")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s_ranks->parsed()) cmd_ranks(ranks, out);
    if (s_cert->parsed()) cmd_certify(cert, out);
    if (s_fit->parsed()) {
      if (fa.matrix.empty() == fa.data.empty()) throw std::invalid_argument("fit needs exactly one of --matrix or --data");
      cmd_fit(fa, out);
    }
    if (s_gcr->parsed()) cmd_gcr(gcr, out);
    if (s_sim->parsed()) {
      if (sim.graph.empty() == sim.family.empty()) throw std::invalid_argument("simulate needs exactly one of --graph or --family");
      cmd_simulate(sim, out);
    }
  } catch (const Inconclusive&) {
    err << "glrank: inconclusive Gaussian verdict\n";
    return kExitInconclusive;
  } catch (const BudgetExceeded& e) {
    err << "glrank: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "glrank: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "glrank: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace glrank::cli
