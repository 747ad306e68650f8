#include <algorithm>
#include <functional>
#include <random>

#include "glrank/certify.hpp"
#include "glrank/graph_invariants.hpp"
#include "glrank/parallel.hpp"
#include "glrank/seeding.hpp"

namespace glrank {

namespace {

// Stream tags keep the random draws of different searches independent.
constexpr std::uint64_t kGcrStream = 0x676372;
constexpr std::uint64_t kWeakStream = 0x7765616b;
constexpr std::uint64_t kRbarStream = 0x72626172;
constexpr std::uint64_t kComponentStream = 0x636f6d70;

std::size_t smallest_passing_rank(std::size_t p, std::size_t trials,
                                  const std::function<bool(std::size_t, std::size_t)>& passes) {
  for (std::size_t r = 1; r < p; ++r) {
    bool all = true;
    for (std::size_t t = 0; t < trials && all; ++t) all = passes(r, t);
    if (all) return r;
  }
  return p;
}

RankFactor trial_factor(std::uint64_t seed, std::uint64_t stream, std::size_t r, std::size_t t, std::size_t p) {
  std::mt19937_64 rng(derive_seed(seed, {stream, r, t}));
  return random_integer_factor(r, p, rng);
}

}  // namespace

std::size_t generic_completion_rank_trial(const Graph& g, std::uint64_t seed) {
  const std::size_t p = g.order();
  const std::size_t ne = g.size();
  if (p <= 1) return p;
  std::mt19937_64 rng(seed);
  // Row r of this matrix is the r-th kernel-defining vector.
  const RankFactor gamma = random_integer_factor(p, p, rng);
  const std::size_t n = p + 2 * ne;
  // Unknowns: diagonal i -> i; for edge e = {u<v}, Omega_uv -> p+2e and Omega_vu -> p+2e+1.
  IntegerEchelon ech(n);
  for (std::size_t e = 0; e < ne; ++e) {
    ZVector row(n);
    row[p + 2 * e] = 1;
    row[p + 2 * e + 1] = -1;
    ech.insert(std::move(row));
  }
  for (std::size_t r = 1; r < p; ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      // gamma_r^T Omega[:, i] = 0
      ZVector row(n);
      row[i] = gamma.x()(r - 1, i).get_num();
      for (std::size_t k : g.neighbors(i)) {
        const std::size_t e = *g.edge_index(k, i);
        row[p + 2 * e + (k < i ? 0 : 1)] = gamma.x()(r - 1, k).get_num();
      }
      ech.insert(std::move(row));
    }
    if (ech.rank() == n) return r;
  }
  return p;
}

std::size_t generic_completion_rank(const Graph& g, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("generic_completion_rank: trials must be >= 1");
  std::vector<std::size_t> hits(trials);
  parallel_for(trials, [&](std::size_t t) {
    hits[t] = generic_completion_rank_trial(g, derive_seed(seed, {kGcrStream, t}));
  });
  // A degenerate draw can only delay the first hit, so the minimum is the consensus.
  return *std::min_element(hits.begin(), hits.end());
}

std::vector<std::string> RankBounds::violations() const {
  std::vector<std::string> out;
  auto check = [&](const char* a, std::size_t va, const char* b, std::size_t vb) {
    if (va > vb) out.push_back(std::string(a) + " (" + std::to_string(va) + ") > " + b + " (" + std::to_string(vb) + ")");
  };
  check("kappa*+1", kappa_star_plus1, "gamma-hat", gaussian_rank_estimate);
  check("gamma-hat", gaussian_rank_estimate, "rho-hat", weak_rank_estimate);
  check("rho-hat", weak_rank_estimate, "gcr", gcr);
  check("gcr", gcr, "degeneracy+1", degeneracy_plus1);
  check("rbar", rbar, "gcr", gcr);
  return out;
}

RankBounds estimate_weak_ranks(const Graph& g, std::size_t trials, std::uint64_t seed, const WeakRankOptions& opts) {
  if (trials == 0) throw std::invalid_argument("estimate_weak_ranks: trials must be >= 1");
  RankBounds b;
  b.trials = trials;
  b.seed = seed;
  const auto comps = g.components();
  if (comps.size() > 1) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const RankBounds part = estimate_weak_ranks(g.induced(comps[c]), trials, derive_seed(seed, {kComponentStream, c}), opts);
      b.kappa_star_plus1 = std::max(b.kappa_star_plus1, part.kappa_star_plus1);
      b.weak_rank_estimate = std::max(b.weak_rank_estimate, part.weak_rank_estimate);
      b.gaussian_rank_estimate = std::max(b.gaussian_rank_estimate, part.gaussian_rank_estimate);
      b.gcr = std::max(b.gcr, part.gcr);
      b.degeneracy_plus1 = std::max(b.degeneracy_plus1, part.degeneracy_plus1);
      b.rbar = std::max(b.rbar, part.rbar);
      b.gaussian_inconclusive += part.gaussian_inconclusive;
    }
    return b;
  }

  const std::size_t p = g.order();
  b.kappa_star_plus1 = subgraph_connectivity(g) + 1;
  b.degeneracy_plus1 = degeneracy(g) + 1;
  if (opts.compute_gcr) b.gcr = generic_completion_rank(g, trials, seed);

  b.weak_rank_estimate = smallest_passing_rank(p, trials, [&](std::size_t r, std::size_t t) {
    const auto v = check_pseudo(g, trial_factor(seed, kWeakStream, r, t, p));
    return v.exists && v.unique;
  });
  b.gaussian_rank_estimate = smallest_passing_rank(p, trials, [&](std::size_t r, std::size_t t) {
    const auto v = check_gaussian(g, trial_factor(seed, kWeakStream, r, t, p), opts.gaussian);
    if (v.inconclusive) ++b.gaussian_inconclusive;
    return v.exists;
  });
  if (opts.compute_rbar) {
    b.rbar = smallest_passing_rank(p, trials, [&](std::size_t r, std::size_t t) {
      const auto v = check_pseudo_recursive(g, trial_factor(seed, kRbarStream, r, t, p));
      return v.exists && v.unique;
    });
  }
  return b;
}

}  // namespace glrank
